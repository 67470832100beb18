// gcx command line: graded dimensions of the even graph complex, the
// combinatorial surgery pairing, and Monte Carlo Gauss linking integrals.

#include "gcx/homology.hpp"
#include "gcx/linking.hpp"
#include "gcx/surgery.hpp"
#include "gcx/surgery_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace gcx;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

LabelledGraph load_graph_arg(const std::string& arg) {
    std::string text = arg;
    auto first = text.find_first_not_of(" \t");
    bool inline_text =
        first != std::string::npos && (text[first] == 'v' || text[first] == '{');
    if (!inline_text) {
        std::ifstream in(arg);
        if (!in) throw GraphError("cannot open graph file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_graph(text);
}

std::pair<int, int> parse_k_range(const std::string& spec) {
    auto dots = spec.find("..");
    int lo = 0, hi = 0;
    if (dots == std::string::npos) {
        lo = hi = std::stoi(spec);
    } else {
        lo = std::stoi(spec.substr(0, dots));
        hi = std::stoi(spec.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) throw GraphError("invalid k range: " + spec);
    return {lo, hi};
}

struct DimsRow {
    int k = 0;
    std::vector<std::size_t> dims_by_excess;
    std::size_t dim_h0 = 0;
    std::size_t dim_ak = 0;
};

DimsRow dims_row(int k, int cap_vertices, bool full_ladder) {
    DimsRow row;
    row.k = k;
    int top = (full_ladder || k <= 5) ? 2 * k - 1 : 1;
    std::vector<std::size_t> ranks;
    for (int ell = 0; ell <= top; ++ell) {
        DifferentialMatrix d = delta_matrix(k, ell, cap_vertices);
        row.dims_by_excess.push_back(d.source.dim());
        ranks.push_back(rank(d.matrix));
    }
    row.dim_h0 = row.dims_by_excess[0] - ranks[0];
    row.dim_ak = ak_space(k, cap_vertices).dim();
    return row;
}

int cmd_dims(const std::string& k_spec, bool as_json, int cap_vertices, bool full_ladder) {
    auto [lo, hi] = parse_k_range(k_spec);
    json rows = json::array();
    for (int k = lo; k <= hi; ++k) {
        DimsRow row = dims_row(k, cap_vertices, full_ladder);
        if (as_json) {
            rows.push_back({{"k", row.k},
                            {"dims_by_excess", row.dims_by_excess},
                            {"dim_H0", row.dim_h0},
                            {"dim_Ak", row.dim_ak}});
        } else {
            std::cout << "k=" << row.k << "  dim G_(k,l)=[";
            for (std::size_t i = 0; i < row.dims_by_excess.size(); ++i)
                std::cout << (i ? "," : "") << row.dims_by_excess[i];
            std::cout << "]  dim H^0=" << row.dim_h0 << "  dim A_k=" << row.dim_ak << "\n";
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return kExitOk;
}

int cmd_export_matrix(int k, int ell, int cap_vertices, const std::string& out_path) {
    DifferentialMatrix d = delta_matrix(k, ell, cap_vertices);
    if (out_path.empty()) {
        d.matrix.write_sms(std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw GraphError("cannot open output file: " + out_path);
        d.matrix.write_sms(out);
    }
    return kExitOk;
}

int cmd_pairing(const std::string& def_arg, const std::string& test_arg, int d, bool as_json,
                int cap_vertices, bool dump_surgery) {
    LabelledGraph def_graph = load_graph_arg(def_arg);
    LabelledGraph test_graph = load_graph_arg(test_arg);
    if (!def_graph.simple())
        throw GraphError("surgery graph is a zero class (self-loop or parallel edges)");
    if (!test_graph.simple())
        throw GraphError("test graph is a zero class (self-loop or parallel edges)");

    CanonicalGraph base = canonical_class(def_graph);
    SurgeryData data = make_surgery_data(orient_arrows(base), d);
    PairingEvaluation eval = evaluate_I_labelled(data, test_graph);

    int k = base.underlying.degree_k();
    AkSpace space = ak_space(k, cap_vertices);
    std::vector<Rational> z = z_k(data, space);

    // coordinates of [base] for the sign report
    std::vector<Rational> base_coords;
    if (!base.orientation_reversing) {
        GraphVector v{k, 0, {}};
        v.add(base, Rational(1));
        base_coords = reduce_to_ak(v, space);
    } else {
        base_coords.assign(space.dim(), Rational(0));
    }
    bool z_zero = std::all_of(z.begin(), z.end(), [](const Rational& q) { return q == 0; });
    std::string sign = "0";
    if (!z_zero && z == base_coords) {
        sign = "+1";
    } else if (!z_zero) {
        std::vector<Rational> negated = base_coords;
        for (Rational& q : negated) q = -q;
        if (z == negated) sign = "-1";
    }

    if (as_json) {
        json j;
        j["k"] = k;
        j["d"] = d;
        j["I"] = to_string(eval.total);
        j["aut_order"] = base.aut_order;
        j["base_orientation_reversing"] = base.orientation_reversing;
        j["matching_bijections"] = eval.summands.size();
        json coords = json::array();
        for (const Rational& q : z) coords.push_back(to_string(q));
        j["z"] = coords;
        j["z_sign_vs_base"] = sign;
        if (dump_surgery) j["surgery"] = surgery_to_json(data);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k=" << k << " d=" << d << "\n";
        std::cout << "I(test) = " << eval.total << "   |Aut base| = " << base.aut_order
                  << "   matching bijections = " << eval.summands.size() << "\n";
        std::cout << "z_" << k << " = [";
        for (std::size_t i = 0; i < z.size(); ++i) std::cout << (i ? "," : "") << z[i];
        std::cout << "]   sign vs [base]: " << sign << "\n";
        if (base.orientation_reversing)
            std::cout << "note: base class is zero in A_k (orientation-reversing automorphism)\n";
        if (dump_surgery) std::cout << surgery_to_json(data).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_link(const std::string& preset, std::optional<int> p_opt, std::optional<int> q_opt,
             std::optional<int> r_opt, int d, const std::string& pair_spec, std::uint64_t samples,
             std::uint64_t seed, int threads, bool antithetic, bool alt_orientation,
             bool as_json) {
    ParamLink link;
    int pair_a = 0, pair_b = 1;
    if (preset == "hopf") {
        int p = p_opt.value_or(1);
        int q = q_opt.value_or(d - 1 - p);
        link = make_hopf(p, q, d, !alt_orientation);
    } else if (preset == "borromean") {
        int p = p_opt.value_or(d - 2);
        int q = q_opt.value_or(d - 2);
        int r = r_opt.value_or(2 * d - 3 - p - q);
        link = make_borromean(p, q, r, d);
        if (!pair_spec.empty()) {
            auto comma = pair_spec.find(',');
            if (comma == std::string::npos) throw GraphError("--pair expects i,j");
            pair_a = std::stoi(pair_spec.substr(0, comma)) - 1;
            pair_b = std::stoi(pair_spec.substr(comma + 1)) - 1;
        }
        if (pair_a < 0 || pair_b < 0 || pair_a > 2 || pair_b > 2 || pair_a == pair_b)
            throw GraphError("--pair components must be distinct members of 1..3");
    } else if (preset == "split") {
        int p = p_opt.value_or(1);
        int q = q_opt.value_or(d - 1 - p);
        link = make_split(p, q, d);
    } else {
        throw GraphError("unknown preset: " + preset);
    }

    const ParamSphere& a = link.components[static_cast<std::size_t>(pair_a)];
    const ParamSphere& b = link.components[static_cast<std::size_t>(pair_b)];
    MCResult r = gauss_linking(a, b, samples, seed, threads, antithetic);
    r.convention = link.convention;

    if (as_json) {
        json j;
        j["estimate"] = r.estimate;
        j["stderr"] = r.stderr_value;
        j["samples"] = r.samples;
        j["seed"] = r.seed;
        j["convention"] = r.convention;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "estimate " << r.estimate << "  stderr " << r.stderr_value << "  samples "
                  << r.samples << "  seed " << r.seed << "\n"
                  << r.convention << "\n";
    }
    return kExitOk;
}


int cmd_graph(const std::string& graph_arg, bool as_json) {
    LabelledGraph g = load_graph_arg(graph_arg);
    auto reduced = canonicalize(g);
    CanonicalGraph cls = g.simple() ? canonical_class(g) : CanonicalGraph{};
    if (as_json) {
        json j;
        j["v"] = g.v;
        j["e"] = g.e();
        j["degree_k"] = g.degree_k();
        j["excess"] = g.excess();
        j["simple"] = g.simple();
        j["zero_class"] = !reduced.has_value();
        if (reduced) {
            j["canonical"] = reduced->cls.underlying.format();
            j["sign"] = reduced->sign;
            j["aut_order"] = reduced->cls.aut_order;
        } else if (g.simple()) {
            j["canonical"] = cls.underlying.format();
            j["aut_order"] = cls.aut_order;
            j["orientation_reversing"] = cls.orientation_reversing;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "v=" << g.v << " e=" << g.e() << "  k=" << g.degree_k()
                  << " excess=" << g.excess() << "\n";
        if (!reduced) {
            std::cout << "zero class";
            if (!g.has_loop() && !g.has_parallel_pair())
                std::cout << " (orientation-reversing automorphism)";
            else
                std::cout << " (self-loop or parallel edges)";
            std::cout << "\n";
            if (g.simple())
                std::cout << "canonical form " << cls.underlying.format() << "  |Aut| = "
                          << cls.aut_order << "\n";
        } else {
            std::cout << "canonical form " << reduced->cls.underlying.format() << "  sign "
                      << (reduced->sign > 0 ? "+1" : "-1") << "  |Aut| = "
                      << reduced->cls.aut_order << "\n";
        }
    }
    return kExitOk;
}

int cmd_selftest(bool quick, std::uint64_t seed, int threads, const std::string& fault) {
    struct Check {
        std::string name;
        bool passed;
    };
    std::vector<Check> checks;
    auto record = [&](const std::string& name, bool ok) {
        checks.push_back({name, ok});
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    };

    for (int k = 1; k <= 3; ++k) {
        bool ok = true;
        for (int ell = 0; 2 * k - (ell + 1) >= 1; ++ell) {
            DifferentialMatrix d0 = delta_matrix(k, ell);
            DifferentialMatrix d1 = delta_matrix(k, ell + 1);
            if (!d1.matrix.multiply(d0.matrix).is_zero()) ok = false;
        }
        record("delta-squared k=" + std::to_string(k), ok);
    }
    for (int k = 1; k <= 3; ++k)
        record("euler-characteristic k=" + std::to_string(k), euler_characteristic_check(k));

    const std::size_t expected_ak[3] = {0, 1, 0};
    for (int k = 1; k <= 3; ++k)
        record("dim-Ak k=" + std::to_string(k), dim_ak(k) == expected_ak[k - 1]);

    for (int d = 2; d <= 5; ++d) {
        bool ok;
        if (fault == "antipodal-parity") {
            // corrupted sign table: compare against the wrong parity
            ok = !antipodal_symmetry_check(d, 32, seed);
        } else {
            ok = antipodal_symmetry_check(d, 32, seed);
        }
        record("antipodal-symmetry d=" + std::to_string(d), ok);
    }

    record("borromean-triple-sign (1,1,1,3)", borromean_triple_sign(1, 1, 1, 3) == 1);
    record("borromean-triple-sign (2,2,1,4)", borromean_triple_sign(2, 2, 1, 4) == 1);

    {
        CanonicalGraph w4 =
            canonical_class(parse_graph("v=4; e=(1,2)(1,3)(1,4)(2,3)(2,4)(3,4)"));
        SurgeryData data = make_surgery_data(orient_arrows(w4), 4);
        if (fault == "pairing-linking-drop") data.linking.erase(data.linking.begin());
        PairingEvaluation eval = evaluate_I_labelled(data, w4.underlying);
        record("pairing-magnitude |I| = |Aut|", abs(eval.total) == Rational(24));
        AkSpace space = ak_space(2);
        std::vector<Rational> z = z_k(data, space);
        record("pairing z_2 = +/-[W4]", z.size() == 1 && abs(z[0]) == 1);
    }

    if (!quick) {
        ParamLink link = make_hopf(1, 2, 4);
        MCResult r = gauss_linking(link.components[0], link.components[1], 100000, seed, threads);
        record("gauss-linking hopf(1,2,4) ~ +1",
               std::fabs(r.estimate - 1.0) <= std::max(0.05, 3 * r.stderr_value));
    }

    for (const Check& c : checks) {
        if (!c.passed) {
            std::cout << "selftest failed: " << c.name << "\n";
            return kExitInvariant;
        }
    }
    std::cout << "selftest passed (" << checks.size() << " checks)\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"even graph complex toolkit"};
    app.require_subcommand(1);

    std::string k_spec = "1..5";
    bool as_json = false;
    int cap_vertices = 14;
    bool full_ladder = false;
    int threads = 1;

    auto* dims = app.add_subcommand("dims", "graded dimensions, H^0 and A_k");
    dims->add_option("--k", k_spec, "degree k or range lo..hi");
    dims->add_flag("--json", as_json, "JSON output");
    dims->add_option("--cap-vertices", cap_vertices, "vertex cap for enumeration");
    dims->add_flag("--full-ladder", full_ladder, "all excesses also for k >= 6");

    std::string def_arg, test_arg;
    int pairing_d = 4;
    bool dump_surgery = false;
    auto* pairing = app.add_subcommand("pairing", "surgery pairing I and Z_k");
    pairing->add_option("--def", def_arg, "surgery graph (inline or file)")->required();
    pairing->add_option("--test", test_arg, "test graph (inline or file)")->required();
    pairing->add_option("--d", pairing_d, "even ambient dimension (>= 4)");
    pairing->add_flag("--json", as_json, "JSON output");
    pairing->add_option("--cap-vertices", cap_vertices, "vertex cap for enumeration");
    pairing->add_flag("--dump-surgery", dump_surgery, "include SurgeryData JSON");

    std::string preset = "hopf";
    std::optional<int> p_opt, q_opt, r_opt;
    int link_d = 4;
    std::string pair_spec;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 0;
    bool antithetic = false;
    bool alt_orientation = false;
    auto* link = app.add_subcommand("link", "Monte Carlo Gauss linking integral");
    link->add_option("--preset", preset, "hopf | borromean | split");
    link->add_option("--p", p_opt, "first sphere dimension");
    link->add_option("--q", q_opt, "second sphere dimension");
    link->add_option("--r", r_opt, "third sphere dimension (borromean)");
    link->add_option("--d", link_d, "ambient dimension");
    link->add_option("--pair", pair_spec, "borromean component pair, e.g. 1,2");
    link->add_option("--samples", samples, "sample count");
    link->add_option("--seed", seed, "RNG seed");
    link->add_option("--threads", threads, "worker threads (result independent)");
    link->add_flag("--antithetic", antithetic, "antithetic pairing");
    link->add_flag("--alt-orientation", alt_orientation,
                   "hopf: use the induced S^q orientation instead of the Lk=+1 one");
    link->add_flag("--json", as_json, "JSON output");

    std::string graph_arg;
    auto* graph_cmd = app.add_subcommand("graph", "canonical form, sign and automorphisms");
    graph_cmd->add_option("--graph", graph_arg, "graph (inline or file)")->required();
    graph_cmd->add_flag("--json", as_json, "JSON output");

    bool quick = false;
    std::string fault;
    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");
    selftest->add_flag("--quick", quick, "skip Monte Carlo checks");
    selftest->add_option("--seed", seed, "RNG seed");
    selftest->add_option("--threads", threads, "worker threads");
    selftest->add_option("--inject-fault", fault,
                         "corrupt a sign table (pairing-linking-drop | antipodal-parity)");

    int export_k = 2, export_ell = 0;
    std::string out_path;
    auto* export_matrix = app.add_subcommand("export-matrix", "delta matrix as SMS triplets");
    export_matrix->add_option("--k", export_k, "degree")->required();
    export_matrix->add_option("--excess", export_ell, "source excess")->required();
    export_matrix->add_option("--out", out_path, "output file (default stdout)");
    export_matrix->add_option("--cap-vertices", cap_vertices, "vertex cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dims->parsed()) return cmd_dims(k_spec, as_json, cap_vertices, full_ladder);
        if (pairing->parsed())
            return cmd_pairing(def_arg, test_arg, pairing_d, as_json, cap_vertices, dump_surgery);
        if (link->parsed())
            return cmd_link(preset, p_opt, q_opt, r_opt, link_d, pair_spec, samples, seed, threads,
                            antithetic, alt_orientation, as_json);
        if (graph_cmd->parsed()) return cmd_graph(graph_arg, as_json);
        if (selftest->parsed()) return cmd_selftest(quick, seed, threads, fault);
        if (export_matrix->parsed())
            return cmd_export_matrix(export_k, export_ell, cap_vertices, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}
