// Command line front end: exact combinatorics of ordered set partitions,
// the permutohedral fan, the presented cohomology ring and its homology
// module, Poincare polynomials, and matrix-correlator families.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "permuto/fan.hpp"
#include "permuto/homology.hpp"
#include "permuto/json_io.hpp"
#include "permuto/poincare.hpp"
#include "permuto/ring.hpp"
#include "permuto/suites.hpp"
#include "permuto/version.hpp"

namespace {

using namespace permuto;

struct GlobalOpts {
    std::string format = "text";
    SuiteConfig config;
};

void emit(const GlobalOpts& g, const SuiteReport& rep) {
    if (g.format == "json")
        std::cout << dump_canonical(rep.to_json());
    else
        std::cout << rep.to_text();
    std::cerr << "# " << rep.suite << " wall time " << rep.wall_ms << " ms\n";
}

int emit_and_exit(const GlobalOpts& g, const SuiteReport& rep) {
    emit(g, rep);
    return rep.ok() ? 0 : 1;
}

int cmd_poincare(const GlobalOpts& g, int n, const std::string& method) {
    ordered_json out;
    out["n"] = n;
    bool consistent = true;
    if (method == "gf" || method == "all") out["gf"] = poincare_gf(n).to_string();
    if (method == "strata" || method == "all") out["strata"] = poincare_strata(n).to_string();
    if (method == "ring" || method == "all") {
        if (n > 5) {
            if (method == "ring") throw CLI::ValidationError("--method ring supports n <= 5");
        } else {
            out["ring"] = graded_dimensions(LabelSet::segment(n));
        }
    }
    if (method == "all") {
        consistent = poincare_gf(n) == poincare_strata(n);
        if (out.contains("ring")) {
            const auto dims = out["ring"].get<std::vector<int>>();
            const auto strata = poincare_strata(n);
            for (int k = 0; k < n; ++k)
                if (BigInt(dims[static_cast<std::size_t>(k)]) != strata.coeff(k)) consistent = false;
        }
        out["consistent"] = consistent;
    }
    if (g.format == "json") {
        std::cout << dump_canonical(out);
    } else {
        for (const auto& [key, value] : out.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
    }
    return consistent ? 0 : 1;
}

int cmd_fan(const GlobalOpts& g, int n, const std::string& export_path, bool verify) {
    if (!export_path.empty()) {
        write_json_file(export_path, fan_to_json(LabelSet::segment(n)));
        std::cerr << "# fan for n=" << n << " written to " << export_path << "\n";
    }
    if (verify) {
        SuiteConfig cfg = g.config;
        cfg.fan_n_max = n;
        return emit_and_exit(g, run_suite("fan", cfg));
    }
    if (export_path.empty()) {
        // default: print the fan to stdout
        std::cout << dump_canonical(fan_to_json(LabelSet::segment(n)));
    }
    return 0;
}

int cmd_ring(const GlobalOpts& g, int n, bool dims, const std::string& reduce_path) {
    if (!reduce_path.empty()) {
        LabelSet B = LabelSet::segment(1);
        const RawMonomial monomial = raw_monomial_from_json(load_json_file(reduce_path), &B);
        const GoodElement reduced = reduce_raw(B, monomial);
        if (g.format == "json")
            std::cout << dump_canonical(good_element_to_json(reduced));
        else
            std::cout << reduced.to_string("m") << "\n";
        return 0;
    }
    if (dims) {
        SuiteConfig cfg = g.config;
        cfg.ring_n_max = n;
        return emit_and_exit(g, run_suite("ring", cfg));
    }
    throw CLI::ValidationError("ring: pass --dims or --reduce FILE");
}

int cmd_homology(const GlobalOpts& g, int n, bool verify_lemma, bool deep) {
    if (!verify_lemma) throw CLI::ValidationError("homology: pass --verify-lemma");
    if (n >= 5 && !deep)
        throw CLI::ValidationError("homology: n >= 5 is expensive; pass --deep to confirm");
    SuiteConfig cfg = g.config;
    cfg.lemma_n_max = n;
    cfg.deep = deep && n >= 5;
    return emit_and_exit(g, run_suite("lemma", cfg));
}

int cmd_correlators(const GlobalOpts& g, const std::string& check_path,
                    const std::string& from_series_path, const std::string& roundtrip_path,
                    int order) {
    if (!check_path.empty()) {
        const auto top = family_from_json(load_json_file(check_path));
        const int n_max = order > 0 ? std::min(order, top.max_points()) : top.max_points();
        SuiteReport rep;
        rep.suite = "correlators-check";
        rep.params["file"] = check_path;
        rep.params["order"] = n_max;
        const auto rel = check_linear_relations(top, n_max);
        rep.checks.push_back({"linear relations", rel.ok(),
                              std::to_string(rel.cases) + " cases, " +
                                  std::to_string(rel.failures) + " failures" +
                                  (rel.failure_samples.empty() ? "" : "; e.g. " + rel.failure_samples.front())});
        if (n_max >= 2) {
            const auto comm = check_commutativity(build_series(top, n_max));
            rep.checks.push_back({"flatness of the associated series", comm.ok(),
                                  std::to_string(comm.slots) + " slots, " +
                                      std::to_string(comm.failures) + " failures"});
        }
        return emit_and_exit(g, rep);
    }
    if (!from_series_path.empty()) {
        const auto series = series_from_json(load_json_file(from_series_path));
        const auto top = top_from_series(series);
        std::cout << dump_canonical(family_to_json(top));
        return 0;
    }
    if (!roundtrip_path.empty()) {
        const auto top = family_from_json(load_json_file(roundtrip_path));
        const int N = order > 0 ? std::min(order, top.max_points()) : top.max_points();
        const auto series = build_series(top, N);
        const auto top2 = top_from_series(series);
        SuiteReport rep;
        rep.suite = "correlators-roundtrip";
        rep.params["file"] = roundtrip_path;
        rep.params["order"] = N;
        const bool family_match = top2 == top;
        rep.checks.push_back({"family -> series -> family", family_match, ""});
        rep.checks.push_back({"series -> family -> series", build_series(top2, N) == series, ""});
        return emit_and_exit(g, rep);
    }
    throw CLI::ValidationError("correlators: pass --check, --from-series or --roundtrip");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of ordered set partitions, the permutohedral fan,\n"
                 "its presented cohomology, and matrix-correlator representations"};
    app.set_version_flag("--version", permuto::version());
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.config.seed, "Seed for all randomized checks")
        ->capture_default_str();

    int n = 3;
    int order = 0;
    bool deep = false;

    auto* poincare = app.add_subcommand("poincare", "Poincare polynomials, three methods");
    std::string method = "all";
    poincare->add_option("--n", n, "Number of marked points")->required();
    poincare->add_option("--method", method, "gf | strata | ring | all")
        ->check(CLI::IsMember({"gf", "strata", "ring", "all"}));

    auto* fan = app.add_subcommand("fan", "Permutohedral fan: export and certification");
    std::string export_path;
    bool fan_verify = false;
    fan->add_option("--n", n, "Size of the label set")->required();
    fan->add_option("--export", export_path, "Write the fan as JSON to this path");
    fan->add_flag("--verify", fan_verify, "Run smoothness/completeness/face checks");
    fan->add_option("--samples", g.config.fan_samples, "Completeness sample count")
        ->capture_default_str();

    auto* ring = app.add_subcommand("ring", "Presented cohomology ring");
    bool ring_dims = false;
    std::string reduce_path;
    ring->add_option("--n", n, "Size of the label set");
    ring->add_flag("--dims", ring_dims, "Graded dimensions by exact rank");
    ring->add_option("--reduce", reduce_path, "Reduce the raw monomial in this JSON file");

    auto* homology = app.add_subcommand("homology", "Homology module verification suites");
    bool verify_lemma = false;
    homology->add_option("--n", n, "Size of the label set")->required();
    homology->add_flag("--verify-lemma", verify_lemma, "Run the five multiplication-table checks");
    homology->add_flag("--deep", deep, "Allow the expensive n = 5 run");

    auto* correlators = app.add_subcommand("correlators", "Matrix correlator families");
    std::string check_path, from_series_path, roundtrip_path;
    correlators->add_option("--check", check_path, "Family JSON: verify the linear relations");
    correlators->add_option("--from-series", from_series_path,
                            "Series JSON: recover the top correlator family");
    correlators->add_option("--roundtrip", roundtrip_path, "Family JSON: series round trip");
    correlators->add_option("--order", order, "Truncation order (defaults to the family level)");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "poincare | fan | ring | lemma | correlators | all")
        ->capture_default_str();
    verify->add_option("--n", n, "Override the main bound of the chosen suite");
    bool n_given = false;
    verify->add_flag("--deep", g.config.deep, "Extend the lemma suite to n = 5");

    auto* exporter = app.add_subcommand("export", "Write canonical JSON artifacts");
    std::string kind, out_path;
    exporter->add_option("--kind", kind, "partitions | fan | ring-dims | series")->required();
    exporter->add_option("--n", n, "Label set size for partition/fan/ring exports");
    exporter->add_option("--out", out_path, "Output path (stdout when omitted)");
    exporter->add_option("--order", g.config.correlator_order, "Series truncation order")
        ->capture_default_str();
    exporter->add_option("--dim", g.config.correlator_dim, "Series matrix dimension")
        ->capture_default_str();
    exporter->add_option("--indices", g.config.correlator_indices, "Series index count")
        ->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (poincare->parsed()) return cmd_poincare(g, n, method);
        if (fan->parsed()) return cmd_fan(g, n, export_path, fan_verify);
        if (ring->parsed()) return cmd_ring(g, n, ring_dims, reduce_path);
        if (homology->parsed()) return cmd_homology(g, n, verify_lemma, deep);
        if (correlators->parsed())
            return cmd_correlators(g, check_path, from_series_path, roundtrip_path, order);
        if (verify->parsed()) {
            SuiteConfig cfg = g.config;
            n_given = verify->count("--n") > 0;
            if (n_given) {
                cfg.poincare_n_max = n;
                cfg.ring_n_max = std::min(n, 5);
                cfg.fan_n_max = std::min(n, 5);
                cfg.lemma_n_max = std::min(n, cfg.deep ? 5 : 4);
            }
            return emit_and_exit(g, run_suite(suite, cfg));
        }
        if (exporter->parsed()) {
            const ordered_json j = export_kind(kind, n, g.config);
            if (out_path.empty())
                std::cout << dump_canonical(j);
            else
                write_json_file(out_path, j);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
