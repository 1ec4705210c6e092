#pragma once

#include <cstdint>
#include <string>

#include "permuto/correlators.hpp"
#include "permuto/report.hpp"

namespace permuto {

// Bounds and seeds for the orchestrated verification suites. Defaults keep
// the full run in well under two minutes.
struct SuiteConfig {
    int poincare_n_max = 8;
    int ring_n_max = 5;
    int fan_n_max = 5;
    int fan_samples = 500;
    int lemma_n_max = 4;
    bool deep = false;  // raises lemma_n_max to 5
    int correlator_order = 5;
    int correlator_dim = 3;
    int correlator_indices = 3;
    std::uint64_t seed = 12345;
};

// name: poincare | fan | ring | lemma | correlators | all
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

// Seeded fixture: pairwise commuting matrices obtained as polynomials in a
// single random matrix.
TopCorrelatorFamily random_commuting_family(int dim, int num_indices, int max_points,
                                            std::uint64_t seed);

// Negative-control fixture: values are products in sorted index order of
// matrices that need not commute, so the quadratic relations fail.
TopCorrelatorFamily product_family_unchecked(const SuperIndexSet& indices,
                                             const std::vector<Matrix>& matrices, int max_points);

// kind: partitions | fan | ring-dims | series
ordered_json export_kind(const std::string& kind, int n, const SuiteConfig& config);

}  // namespace permuto
