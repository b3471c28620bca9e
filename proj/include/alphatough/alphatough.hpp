#pragma once

// Umbrella header: A_alpha spectral radii, exact graph toughness, the
// extremal families, and the theorem / proof-chain verification suite.

#include "alphatough/cubic.hpp"
#include "alphatough/graph.hpp"
#include "alphatough/graph6.hpp"
#include "alphatough/matrix.hpp"
#include "alphatough/partition.hpp"
#include "alphatough/rational.hpp"
#include "alphatough/scan.hpp"
#include "alphatough/spectral.hpp"
#include "alphatough/theorems.hpp"
#include "alphatough/toughness.hpp"
