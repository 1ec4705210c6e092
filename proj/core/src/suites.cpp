#include "permuto/suites.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permuto/fan.hpp"
#include "permuto/homology.hpp"
#include "permuto/json_io.hpp"
#include "permuto/poincare.hpp"
#include "permuto/ring.hpp"
#include "permuto/version.hpp"

namespace permuto {

namespace {

void push(SuiteReport& rep, std::string name, bool passed, std::string detail = "") {
    rep.checks.push_back({std::move(name), passed, std::move(detail)});
}

ordered_json config_to_json(const SuiteConfig& cfg) {
    ordered_json j;
    j["poincare_n_max"] = cfg.poincare_n_max;
    j["ring_n_max"] = cfg.ring_n_max;
    j["fan_n_max"] = cfg.fan_n_max;
    j["fan_samples"] = cfg.fan_samples;
    j["lemma_n_max"] = cfg.lemma_n_max;
    j["deep"] = cfg.deep;
    j["correlator_order"] = cfg.correlator_order;
    j["correlator_dim"] = cfg.correlator_dim;
    j["correlator_indices"] = cfg.correlator_indices;
    j["seed"] = cfg.seed;
    return j;
}

std::string dims_to_string(const std::vector<int>& dims) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << ']';
    return os.str();
}

SuiteReport suite_poincare(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "poincare";
    rep.params["n_max"] = cfg.poincare_n_max;
    rep.params["ring_n_max"] = cfg.ring_n_max;
    const auto pc = poincare_cross_check(cfg.poincare_n_max, std::min(cfg.ring_n_max, 5));
    for (const auto& c : pc.checks) push(rep, c.name, c.passed, c.detail);
    // pinned small values
    push(rep, "p_3", poincare_gf(3).to_string() == "q^2+4q+1", poincare_gf(3).to_string());
    push(rep, "p_4", poincare_gf(4).to_string() == "q^3+11q^2+11q+1", poincare_gf(4).to_string());
    push(rep, "p_5", poincare_gf(5).to_string() == "q^4+26q^3+66q^2+26q+1",
         poincare_gf(5).to_string());
    return rep;
}

SuiteReport suite_ring(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "ring";
    rep.params["n_max"] = cfg.ring_n_max;
    for (int n = 1; n <= cfg.ring_n_max; ++n) {
        const LabelSet B = LabelSet::segment(n);
        const auto dims = graded_dimensions(B);
        bool match = true;
        BigInt total = 0;
        for (int k = 0; k < n; ++k) {
            if (BigInt(dims[static_cast<std::size_t>(k)]) != eulerian(n, k)) match = false;
            total += dims[static_cast<std::size_t>(k)];
        }
        push(rep, "graded dims == Eulerian row, n=" + std::to_string(n), match,
             dims_to_string(dims));
        push(rep, "total dim == n!, n=" + std::to_string(n), total == factorial(n));
    }
    return rep;
}

SuiteReport suite_fan(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "fan";
    rep.params["n_max"] = cfg.fan_n_max;
    rep.params["samples"] = cfg.fan_samples;
    rep.params["seed"] = cfg.seed;
    for (int n = 1; n <= cfg.fan_n_max; ++n) {
        const LabelSet B = LabelSet::segment(n);
        const auto partitions = enumerate_partitions(B);

        bool smooth = true;
        long long maximal = 0;
        bool dims_ok = true;
        for (const auto& tau : partitions) {
            if (!check_smooth(tau)) smooth = false;
            if (tau.length() == n) ++maximal;
            if (cone_of(tau).dimension() != tau.length() - 1) dims_ok = false;
        }
        push(rep, "all cones smooth, n=" + std::to_string(n), smooth);
        push(rep, "maximal cones == n!, n=" + std::to_string(n), maximal == factorial(n),
             std::to_string(maximal));
        push(rep, "cone dims == length-1, n=" + std::to_string(n), dims_ok);

        // face lattice == refinement order, via good-family inclusion
        bool faces_ok = true;
        for (const auto& tau : partitions) {
            const auto fam_tau = good_family(tau);
            const std::set<TwoPartition> fam_set(fam_tau.begin(), fam_tau.end());
            for (const auto& face : partitions) {
                bool included = true;
                for (const auto& s : good_family(face))
                    if (!fam_set.count(s)) {
                        included = false;
                        break;
                    }
                if (included != is_face(face, tau)) faces_ok = false;
            }
            if (!faces_ok) break;
        }
        push(rep, "face lattice == refinement order, n=" + std::to_string(n), faces_ok);

        if (n >= 2) {
            const auto comp = check_complete(B, cfg.fan_samples, cfg.seed);
            push(rep, "completeness sampling, n=" + std::to_string(n), comp.ok(),
                 "maximal cones hit: " + std::to_string(comp.maximal_cones_hit));
        }
    }

    // forgetful / section coherence with one forgotten label
    for (int n = 2; n <= std::min(cfg.fan_n_max, 4); ++n) {
        const LabelSet B_big = LabelSet::segment(n);
        std::vector<int> small_labels(B_big.labels().begin(), B_big.labels().end() - 1);
        const LabelSet B_small(small_labels);
        const int forgotten = n;

        bool cones_map = true;
        for (const auto& tau_big : enumerate_partitions(B_big)) {
            const auto tau = forgetful_partition_map(tau_big, B_small);
            for (const auto& g : cone_of(tau_big).generators) {
                const auto img = forgetful_vector_map(B_small, g);
                if (membership(to_rational(img), tau) == Membership::outside) cones_map = false;
            }
        }
        push(rep, "forgetful map sends cones into cones, n=" + std::to_string(n), cones_map);

        bool sections_ok = true;
        bool section_inverse = true;
        for (const auto& tau : enumerate_partitions(B_small)) {
            for (int j : B_small.labels()) {
                // predicted image: forgotten label joins j's block
                std::vector<Block> blocks = tau.blocks();
                blocks[static_cast<std::size_t>(tau.block_index_of(j))].push_back(forgotten);
                const OrderedSetPartition predicted{std::move(blocks)};
                for (const auto& g : cone_of(tau).generators) {
                    const auto img = section_vector_map(j, B_big, g);
                    if (membership(to_rational(img), predicted) == Membership::outside)
                        sections_ok = false;
                    if (forgetful_vector_map(B_small, img) != g) section_inverse = false;
                }
            }
        }
        push(rep, "sections land in predicted cones, n=" + std::to_string(n), sections_ok);
        push(rep, "forgetful o section == id, n=" + std::to_string(n), section_inverse);

        bool fibers_ok = true;
        for (const auto& tau : enumerate_partitions(B_small)) {
            const auto strata = fiber_strata(tau, forgotten);
            if (static_cast<int>(strata.size()) != 2 * tau.length() + 1) fibers_ok = false;
            for (const auto& [tau_big, kind] : strata)
                if (forgetful_partition_map(tau_big, B_small) != tau) fibers_ok = false;
        }
        push(rep, "fiber strata count == 2l+1 and project back, n=" + std::to_string(n), fibers_ok);
    }
    return rep;
}

SuiteReport suite_lemma(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "lemma";
    const int n_max = cfg.deep ? std::max(cfg.lemma_n_max, 5) : cfg.lemma_n_max;
    rep.params["n_max"] = n_max;
    for (int n = 2; n <= n_max; ++n) {
        const auto lr = verify_technical_lemma(LabelSet::segment(n));
        for (const auto& c : lr.checks) {
            std::string detail = std::to_string(c.cases) + " cases";
            if (!c.failure_samples.empty()) detail += "; e.g. " + c.failure_samples.front();
            push(rep, c.name + ", n=" + std::to_string(n), c.passed(), detail);
        }
    }
    // negative control: a sign flip must break descent or commutation
    {
        LemmaOptions opts;
        opts.flip_sign = true;
        const auto lr = verify_technical_lemma(LabelSet::segment(3), opts);
        bool broke = false;
        for (const auto& c : lr.checks)
            if ((c.name.rfind("descent", 0) == 0 || c.name.rfind("commuting", 0) == 0) && !c.passed())
                broke = true;
        push(rep, "negative control: sign flip breaks descent or commutation", broke);
    }
    return rep;
}

SuiteReport suite_correlators(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "correlators";
    rep.params["order"] = cfg.correlator_order;
    rep.params["dimF"] = cfg.correlator_dim;
    rep.params["indices"] = cfg.correlator_indices;
    rep.params["seed"] = cfg.seed;

    const int N = cfg.correlator_order;
    const auto top = random_commuting_family(cfg.correlator_dim, cfg.correlator_indices, N, cfg.seed);

    const auto relations = check_linear_relations(top, N);
    push(rep, "linear relations hold for commuting family", relations.ok(),
         std::to_string(relations.cases) + " cases");

    const auto series = build_series(top, N);
    const auto comm = check_commutativity(series);
    push(rep, "flatness of the built series to order N-2", comm.ok(),
         std::to_string(comm.slots) + " slots");

    const auto top2 = top_from_series(series);
    push(rep, "series -> family round trip", top2 == top);
    const auto relations2 = check_linear_relations(top2, N);
    push(rep, "linear relations hold for recovered family", relations2.ok());
    push(rep, "family -> series round trip", build_series(top2, N) == series);

    // negative control: non-commuting one-point values
    {
        Matrix c1(2, 2), c2(2, 2);
        c1.at(0, 1) = 1;  // strictly upper
        c2.at(1, 0) = 1;  // strictly lower: [c1, c2] != 0
        const SuperIndexSet I({0, 1}, {0, 0});
        const auto bad = product_family_unchecked(I, {c1, c2}, 3);
        bool threw = false;
        try {
            build_from_commuting(I, {c1, c2}, 3);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        push(rep, "negative control: build_from_commuting rejects non-commuting input", threw);
        const auto bad_relations = check_linear_relations(bad, 2);
        push(rep, "negative control: relations fail", !bad_relations.ok(),
             std::to_string(bad_relations.failures) + " failures");
        const auto bad_comm = check_commutativity(build_series(bad, 3), 1);
        push(rep, "negative control: flatness fails", !bad_comm.ok(),
             std::to_string(bad_comm.failures) + " failures");
    }
    return rep;
}

}  // namespace

TopCorrelatorFamily random_commuting_family(int dim, int num_indices, int max_points,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3);
    Matrix base(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) base.at(r, c) = small(rng);
    // powers of one matrix commute pairwise
    std::vector<Matrix> powers;
    powers.push_back(Matrix::identity(dim));
    for (int k = 1; k < std::max(dim, 2); ++k) powers.push_back(powers.back() * base);
    std::vector<Matrix> mats;
    std::vector<int> labels, parities;
    for (int a = 0; a < num_indices; ++a) {
        Matrix m(dim, dim);
        for (const auto& p : powers) {
            Matrix t = p;
            t *= Rat(small(rng));
            m += t;
        }
        mats.push_back(std::move(m));
        labels.push_back(a);
        parities.push_back(0);
    }
    return build_from_commuting(SuperIndexSet(std::move(labels), std::move(parities)), mats,
                                max_points);
}

TopCorrelatorFamily product_family_unchecked(const SuperIndexSet& indices,
                                             const std::vector<Matrix>& matrices, int max_points) {
    if (static_cast<int>(matrices.size()) != indices.size())
        throw std::invalid_argument("product_family_unchecked: one matrix per index required");
    const int dim = matrices.front().rows();
    TopCorrelatorFamily top(indices, dim, max_points);
    std::vector<int> tuple;
    auto rec = [&](auto&& self, int from, int remaining, const Matrix& acc) -> void {
        if (!tuple.empty()) top.set(tuple, acc);
        if (remaining == 0) return;
        for (int k = from; k < indices.size(); ++k) {
            tuple.push_back(indices.labels()[static_cast<std::size_t>(k)]);
            self(self, k, remaining - 1, acc * matrices[static_cast<std::size_t>(k)]);
            tuple.pop_back();
        }
    };
    rec(rec, 0, max_points, Matrix::identity(dim));
    return top;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    if (name == "poincare") {
        rep = suite_poincare(config);
    } else if (name == "ring") {
        rep = suite_ring(config);
    } else if (name == "fan") {
        rep = suite_fan(config);
    } else if (name == "lemma") {
        rep = suite_lemma(config);
    } else if (name == "correlators") {
        rep = suite_correlators(config);
    } else if (name == "all") {
        rep.suite = "all";
        for (const char* sub : {"poincare", "ring", "fan", "lemma", "correlators"}) {
            SuiteReport r = run_suite(sub, config);
            for (auto& c : r.checks) {
                c.name = std::string(sub) + ": " + c.name;
                rep.checks.push_back(std::move(c));
            }
        }
    } else {
        throw std::invalid_argument("unknown suite '" + name +
                                    "' (expected poincare|fan|ring|lemma|correlators|all)");
    }
    rep.params["seed"] = config.seed;
    rep.params["config"] = config_to_json(config);
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

ordered_json export_kind(const std::string& kind, int n, const SuiteConfig& config) {
    if (kind == "partitions") {
        ordered_json j = ordered_json::array();
        for (const auto& p : enumerate_partitions(LabelSet::segment(n)))
            j.push_back(partition_to_json(p));
        return j;
    }
    if (kind == "fan") return fan_to_json(LabelSet::segment(n));
    if (kind == "ring-dims") {
        ordered_json j;
        j["n"] = n;
        j["dims"] = graded_dimensions(LabelSet::segment(n));
        return j;
    }
    if (kind == "series") {
        const auto top = random_commuting_family(config.correlator_dim, config.correlator_indices,
                                                 config.correlator_order, config.seed);
        return series_to_json(build_series(top, config.correlator_order));
    }
    throw std::invalid_argument("unknown export kind '" + kind +
                                "' (expected partitions|fan|ring-dims|series)");
}

}  // namespace permuto
