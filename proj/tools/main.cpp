// alphatough: A_alpha spectral radii, exact toughness, extremal families,
// and theorem verification from the command line.
//
// Exit codes: 0 on success (and zero failed checks for verify/scan/audit),
// 1 when a verification reports failures, 2 on usage or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alphatough/alphatough.hpp"

namespace at = alphatough;
using nlohmann::json;

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// alpha accepted as a decimal or a fraction ("2/3"), so the piecewise
// boundary of the minimum-order rule is hit exactly.
double parse_alpha(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return std::stod(text);
    double num = std::stod(text.substr(0, slash));
    double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("alpha: zero denominator");
    return num / den;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

struct Output {
    std::string format = "text";  // text | csv | json
    std::string path;             // empty = stdout

    void write(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + path);
            out << content;
        }
    }
};

at::Graph load_graph(const std::string& g6, const std::string& edges_path) {
    if (!g6.empty() && !edges_path.empty())
        throw std::invalid_argument("give either --g6 or --edges, not both");
    if (!g6.empty()) return at::parse_graph6(g6);
    if (!edges_path.empty()) return at::parse_edge_list(read_file(edges_path));
    throw std::invalid_argument("a graph is required: --g6 CODE or --edges PATH");
}

std::string witness_str(const at::VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(s.members[i]);
    }
    return out + "}";
}

std::string toughness_str(const at::Toughness& t) {
    return t.infinite ? "infinite" : t.value.str();
}

// ---- rho ------------------------------------------------------------

int run_rho(const at::Graph& g, const std::vector<double>& alphas, const Output& out) {
    int n = g.order();
    long long m = g.edge_count();
    std::ostringstream text;
    json j{{"n", n}, {"m", m}, {"rows", json::array()}};
    if (out.format == "csv") text << "n,m,alpha,rho,size_bound,slack\n";
    if (out.format == "text") text << "graph: n=" << n << " m=" << m << "\n";
    for (double alpha : alphas) {
        double rho = at::spectral_radius(g, alpha);
        double bound = at::spectral_radius_size_bound(n, m, alpha);
        double slack = bound - rho;
        if (out.format == "csv") {
            text << n << "," << m << "," << fmt(alpha) << "," << fmt(rho) << "," << fmt(bound)
                 << "," << fmt(slack) << "\n";
        } else if (out.format == "text") {
            text << "alpha=" << fmt(alpha) << " rho=" << fmt(rho) << " size_bound=" << fmt(bound)
                 << " slack=" << fmt(slack) << "\n";
        } else {
            j["rows"].push_back(
                {{"alpha", alpha}, {"rho", rho}, {"size_bound", bound}, {"slack", slack}});
        }
    }
    out.write(out.format == "json" ? j.dump(2) + "\n" : text.str());
    return 0;
}

// ---- tough ----------------------------------------------------------

int run_tough(const at::Graph& g, int cap, bool cap_override, const Output& out) {
    if (g.order() > cap && !cap_override)
        throw std::invalid_argument("order " + std::to_string(g.order()) +
                                    " exceeds the practical cap " + std::to_string(cap) +
                                    "; pass --cap-override to force");
    at::Toughness t = at::toughness(g);
    std::ostringstream text;
    if (out.format == "csv") {
        text << "n,m,toughness,witness,components\n";
        text << g.order() << "," << g.edge_count() << "," << toughness_str(t) << ",";
        for (std::size_t i = 0; i < t.witness.members.size(); ++i)
            text << (i ? " " : "") << t.witness.members[i];
        text << "," << t.components << "\n";
    } else if (out.format == "text") {
        if (t.infinite)
            text << "toughness=infinite (complete graph)\n";
        else
            text << "toughness=" << t.value.str() << " witness=" << witness_str(t.witness)
                 << " components=" << t.components << "\n";
    } else {
        json j{{"n", g.order()}, {"m", g.edge_count()}, {"infinite", t.infinite}};
        if (!t.infinite) {
            j["toughness"] = t.value.str();
            j["witness"] = t.witness.members;
            j["components"] = t.components;
        }
        text << j.dump(2) << "\n";
    }
    out.write(text.str());
    return 0;
}

// ---- verify ----------------------------------------------------------

int run_verify(const at::Graph& g, const std::string& theorem, double alpha, int t, double tol,
               const Output& out) {
    at::TheoremVerdict v;
    if (theorem == "1.1")
        v = at::check_theorem11(g, alpha, tol);
    else if (theorem == "1.2")
        v = at::check_theorem12(g, alpha, t, tol);
    else
        throw std::invalid_argument("--theorem must be 1.1 or 1.2");

    std::ostringstream text;
    if (out.format == "csv") {
        text << "theorem,n,alpha,t,rho,threshold,margin,hypothesis,conclusion,extremal,"
                "consistent\n";
        text << theorem << "," << g.order() << "," << fmt(alpha) << ","
             << (theorem == "1.2" ? std::to_string(t) : "1") << "," << fmt(v.rho) << ","
             << fmt(v.threshold) << "," << fmt(v.hypothesis_margin) << "," << v.hypothesis_holds
             << "," << v.conclusion_holds << "," << v.is_extremal << "," << v.consistent << "\n";
    } else if (out.format == "text") {
        text << "theorem " << theorem << ": n=" << g.order() << " alpha=" << fmt(alpha);
        if (theorem == "1.2") text << " t=" << t;
        text << "\nrho=" << fmt(v.rho) << " threshold=" << fmt(v.threshold)
             << " margin=" << fmt(v.hypothesis_margin) << "\nhypothesis="
             << (v.hypothesis_holds ? "true" : "false")
             << " conclusion=" << (v.conclusion_holds ? "true" : "false")
             << " extremal=" << (v.is_extremal ? "true" : "false")
             << " consistent=" << (v.consistent ? "true" : "false") << "\n";
    } else {
        json j{{"theorem", theorem},
               {"n", g.order()},
               {"alpha", alpha},
               {"rho", v.rho},
               {"threshold", v.threshold},
               {"margin", v.hypothesis_margin},
               {"hypothesis", v.hypothesis_holds},
               {"conclusion", v.conclusion_holds},
               {"extremal", v.is_extremal},
               {"consistent", v.consistent}};
        if (theorem == "1.2") j["t"] = t;
        text << j.dump(2) << "\n";
    }
    out.write(text.str());
    return v.consistent ? 0 : 1;
}

// ---- scan ------------------------------------------------------------

int run_scan(const std::string& theorem, int n, const std::string& stream_path, double alpha,
             int jobs, double tol, const Output& out) {
    if (theorem != "1.1")
        throw std::invalid_argument(
            "scan supports --theorem 1.1 only (the t-tough theorem is not exhaustively "
            "scannable at the orders it requires)");
    at::ScanOptions opts;
    opts.jobs = jobs;
    opts.eps = tol;
    at::ScanReport report;
    if (!stream_path.empty())
        report = at::scan_theorem11_stream(read_lines(stream_path), alpha, opts);
    else if (n > 0)
        report = at::scan_theorem11(n, alpha, opts);
    else
        throw std::invalid_argument("scan needs --n for enumeration or --g6 FILE for a stream");

    std::ostringstream text;
    if (out.format == "csv") {
        text << "n,alpha,threshold,total,connected,skipped,hypothesis_true,extremal,"
                "extremal_margin_worst,inconsistent\n";
        text << report.n << "," << fmt(report.alpha) << "," << fmt(report.threshold) << ","
             << report.total << "," << report.connected << "," << report.skipped << ","
             << report.hypothesis_true << "," << report.extremal_count << ","
             << fmt(report.extremal_margin_worst) << "," << report.inconsistent_count() << "\n";
        for (const auto& bad : report.inconsistencies)
            std::cerr << "inconsistent," << bad.index << "," << bad.graph6 << "," << fmt(bad.rho)
                      << "," << fmt(bad.margin) << "\n";
    } else if (out.format == "text") {
        text << "scan theorem " << theorem << ": "
             << (stream_path.empty() ? "n=" + std::to_string(report.n)
                                     : "stream " + stream_path)
             << " alpha=" << fmt(report.alpha);
        if (stream_path.empty()) text << " threshold=" << fmt(report.threshold);
        text << "\ntotal=" << report.total << " connected=" << report.connected
             << " skipped=" << report.skipped << " hypothesis_true=" << report.hypothesis_true
             << " extremal=" << report.extremal_count
             << " extremal_margin_worst=" << fmt(report.extremal_margin_worst) << "\n";
        for (const auto& bad : report.inconsistencies)
            text << "INCONSISTENT index=" << bad.index << " graph6=" << bad.graph6
                 << " rho=" << fmt(bad.rho) << " margin=" << fmt(bad.margin) << "\n";
        text << report.inconsistent_count() << " inconsistencies / " << report.connected
             << " connected graphs\n";
    } else {
        json bads = json::array();
        for (const auto& bad : report.inconsistencies)
            bads.push_back({{"index", bad.index},
                            {"graph6", bad.graph6},
                            {"rho", bad.rho},
                            {"margin", bad.margin}});
        json j{{"theorem", theorem},
               {"n", report.n},
               {"alpha", report.alpha},
               {"threshold", report.threshold},
               {"total", report.total},
               {"connected", report.connected},
               {"skipped", report.skipped},
               {"hypothesis_true", report.hypothesis_true},
               {"extremal", report.extremal_count},
               {"extremal_margin_worst", report.extremal_margin_worst},
               {"inconsistencies", bads}};
        text << j.dump(2) << "\n";
    }
    out.write(text.str());
    return report.inconsistent_count() == 0 ? 0 : 1;
}

// ---- audit -----------------------------------------------------------

int run_audit(const at::AuditReport& report, const Output& out) {
    std::ostringstream text;
    if (out.format == "csv") {
        text << "check,lhs,rhs,margin,pass\n";
        for (const auto& c : report.checks)
            text << c.name << "," << fmt(c.lhs) << "," << fmt(c.rhs) << "," << fmt(c.margin)
                 << "," << c.pass << "\n";
    } else if (out.format == "text") {
        text << "audit " << report.title << "\n";
        for (const auto& c : report.checks)
            text << (c.pass ? "PASS" : "FAIL") << " " << c.name << " lhs=" << fmt(c.lhs)
                 << " rhs=" << fmt(c.rhs) << " margin=" << fmt(c.margin) << "\n";
        text << (report.all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    } else {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"margin", c.margin},
                              {"pass", c.pass}});
        json j{{"title", report.title}, {"checks", checks}, {"all_pass", report.all_pass()}};
        text << j.dump(2) << "\n";
    }
    out.write(text.str());
    return report.all_pass() ? 0 : 1;
}

// ---- family ----------------------------------------------------------

int run_family(const std::string& name, int n, int s, int t, int c,
               const std::vector<double>& alphas, int cap, bool cap_override,
               const Output& out) {
    at::Graph g = at::complete(1);
    if (name == "gs2") {
        if (s < 1) throw std::invalid_argument("family gs2 needs --s");
        g = at::family_gs2(n, s);
    } else if (name == "g2") {
        if (t < 1 || c < 2) throw std::invalid_argument("family g2 needs --t and --c");
        g = at::family_g2(n, t, c);
    } else if (name == "g3") {
        if (t < 1) throw std::invalid_argument("family g3 needs --t");
        g = at::family_g3(n, t);
    } else {
        throw std::invalid_argument("unknown family (gs2 | g2 | g3)");
    }

    bool with_toughness = g.order() <= cap || cap_override;
    at::Toughness tough;
    if (with_toughness) tough = at::toughness(g);
    std::string code = at::emit_graph6(g);

    std::ostringstream text;
    if (out.format == "csv") {
        text << "family,n,s,t,c,m,graph6,alpha,rho,toughness\n";
        auto row_prefix = [&](std::ostringstream& os) {
            os << name << "," << n << "," << (name == "gs2" ? std::to_string(s) : "") << ","
               << (name != "gs2" ? std::to_string(t) : "") << ","
               << (name == "g2" ? std::to_string(c) : "") << "," << g.edge_count() << "," << code
               << ",";
        };
        if (alphas.empty()) {
            row_prefix(text);
            text << ",," << (with_toughness ? toughness_str(tough) : "n/a") << "\n";
        }
        for (double alpha : alphas) {
            row_prefix(text);
            text << fmt(alpha) << "," << fmt(at::spectral_radius(g, alpha)) << ","
                 << (with_toughness ? toughness_str(tough) : "n/a") << "\n";
        }
    } else if (out.format == "text") {
        text << "family " << name << ": n=" << g.order() << " m=" << g.edge_count()
             << " graph6=" << code << "\n";
        for (double alpha : alphas)
            text << "alpha=" << fmt(alpha) << " rho=" << fmt(at::spectral_radius(g, alpha))
                 << "\n";
        if (with_toughness) {
            if (tough.infinite)
                text << "toughness=infinite\n";
            else
                text << "toughness=" << tough.value.str() << " witness=" << witness_str(tough.witness)
                     << " components=" << tough.components << "\n";
        } else {
            text << "toughness=n/a (order above cap; pass --cap-override)\n";
        }
    } else {
        json j{{"family", name}, {"n", g.order()}, {"m", g.edge_count()}, {"graph6", code}};
        json rows = json::array();
        for (double alpha : alphas)
            rows.push_back({{"alpha", alpha}, {"rho", at::spectral_radius(g, alpha)}});
        j["rows"] = rows;
        if (with_toughness) {
            j["toughness"] = toughness_str(tough);
            if (!tough.infinite) {
                j["witness"] = tough.witness.members;
                j["components"] = tough.components;
            }
        }
        text << j.dump(2) << "\n";
    }
    out.write(text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A_alpha spectral radius and graph toughness toolkit"};
    app.require_subcommand(1);

    std::string g6, edges_path, theorem = "1.1", family_name, audit_name;
    std::vector<std::string> alpha_args;
    Output out;
    int n = 0, s = 0, t = 0, c = 0, jobs = 1, cap = 22;
    double tol = at::kEps;
    bool cap_override = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "text | csv | json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--out", out.path, "write to a file instead of stdout");
    };
    auto add_graph_input = [&](CLI::App* cmd) {
        cmd->add_option("--g6", g6, "graph6 code");
        cmd->add_option("--edges", edges_path, "edge-list file");
    };

    CLI::App* rho = app.add_subcommand("rho", "spectral radius of A_alpha(G)");
    add_graph_input(rho);
    rho->add_option("--alpha", alpha_args, "alpha values (decimal or fraction)")->required();
    add_output(rho);

    CLI::App* tough = app.add_subcommand("tough", "exact toughness with witness cut");
    add_graph_input(tough);
    tough->add_flag("--cap-override", cap_override, "allow orders above the practical cap");
    tough->add_option("--cap", cap, "practical order cap (default 22)");
    add_output(tough);

    CLI::App* verify = app.add_subcommand("verify", "test one graph against a theorem");
    add_graph_input(verify);
    verify->add_option("--theorem", theorem, "1.1 or 1.2")->required();
    verify->add_option("--alpha", alpha_args, "alpha value")->required();
    verify->add_option("--t", t, "toughness level for theorem 1.2");
    verify->add_option("--tol", tol, "comparison tolerance");
    add_output(verify);

    CLI::App* scan = app.add_subcommand("scan", "exhaustive or streamed theorem scan");
    scan->add_option("--theorem", theorem, "1.1")->required();
    scan->add_option("--n", n, "order for built-in labeled enumeration (6..8)");
    scan->add_option("--g6", g6, "file of graph6 lines to scan instead");
    scan->add_option("--alpha", alpha_args, "alpha value")->required();
    scan->add_option("--jobs", jobs, "parallel chunks");
    scan->add_option("--tol", tol, "comparison tolerance");
    add_output(scan);

    CLI::App* audit = app.add_subcommand("audit", "numerical audit of a proof chain");
    audit->add_option("name", audit_name, "t11 | t12")->required();
    audit->add_option("--n", n, "order")->required();
    audit->add_option("--s", s, "cut size (t11)");
    audit->add_option("--t", t, "toughness level (t12)");
    audit->add_option("--c", c, "component count (t12)");
    audit->add_option("--alpha", alpha_args, "alpha value")->required();
    audit->add_option("--tol", tol, "check tolerance");
    add_output(audit);

    CLI::App* family = app.add_subcommand("family", "construct an extremal family graph");
    family->add_option("name", family_name, "gs2 | g2 | g3")->required();
    family->add_option("--n", n, "order")->required();
    family->add_option("--s", s, "cut size (gs2)");
    family->add_option("--t", t, "toughness level (g2, g3)");
    family->add_option("--c", c, "component count (g2)");
    family->add_option("--alpha", alpha_args, "alpha values for rho rows");
    family->add_flag("--cap-override", cap_override, "compute toughness above the cap");
    family->add_option("--cap", cap, "toughness order cap (default 22)");
    add_output(family);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<double> alphas;
        for (const auto& a : alpha_args) alphas.push_back(parse_alpha(a));

        if (rho->parsed()) return run_rho(load_graph(g6, edges_path), alphas, out);
        if (tough->parsed())
            return run_tough(load_graph(g6, edges_path), cap, cap_override, out);
        if (verify->parsed()) {
            if (alphas.size() != 1) throw std::invalid_argument("verify takes one --alpha");
            return run_verify(load_graph(g6, edges_path), theorem, alphas[0], t, tol, out);
        }
        if (scan->parsed()) {
            if (alphas.size() != 1) throw std::invalid_argument("scan takes one --alpha");
            return run_scan(theorem, n, g6, alphas[0], jobs, tol, out);
        }
        if (audit->parsed()) {
            if (alphas.size() != 1) throw std::invalid_argument("audit takes one --alpha");
            if (audit_name == "t11") return run_audit(at::audit_theorem11_chain(n, s, alphas[0], tol), out);
            if (audit_name == "t12")
                return run_audit(at::audit_theorem12_chain(n, t, alphas[0], c, tol), out);
            throw std::invalid_argument("audit name must be t11 or t12");
        }
        if (family->parsed())
            return run_family(family_name, n, s, t, c, alphas, cap, cap_override, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
