#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permuto/label_set.hpp"
#include "permuto/lattice.hpp"
#include "permuto/partition.hpp"

namespace permuto {

// A simplicial cone of the permutohedral fan, indexed by an ordered set
// partition. Generators are the partial indicator sums
// chi_{tau_1}, chi_{tau_1}+chi_{tau_2}, ..., one per proper prefix of tau.
struct Cone {
    OrderedSetPartition tau;
    std::vector<LatticeVector> generators;

    int dimension() const { return static_cast<int>(generators.size()); }
};

Cone cone_of(const OrderedSetPartition& tau);

// The decreasing level-set partition of chi; chi lies in the relative
// interior of the located cone.
OrderedSetPartition locate(const RationalVector& chi);

enum class Membership { interior, boundary, outside };

Membership membership(const RationalVector& chi, const OrderedSetPartition& tau);
Membership membership(const RationalVector& chi, const Cone& cone);

// C(tau_face) is a face of C(tau) iff tau refines tau_face.
bool is_face(const OrderedSetPartition& tau_face, const OrderedSetPartition& tau);

// The cone indexed by the common coarsening whose good family is the
// intersection of the two good families (the set-theoretic intersection of
// the two cones).
OrderedSetPartition intersect_cones(const OrderedSetPartition& a, const OrderedSetPartition& b);

// Generators extend to a basis of the lattice: every elementary divisor of
// the generator matrix is 1.
bool unimodular(const std::vector<LatticeVector>& generators);
bool check_smooth(const OrderedSetPartition& tau);

// Elementary divisors (Smith normal form diagonal) of an integer matrix.
std::vector<std::int64_t> elementary_divisors(std::vector<std::vector<std::int64_t>> m);

struct CompletenessReport {
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    long long maximal_cones_total = 0;  // number of length-n partitions, expected n!
    int maximal_cones_hit = 0;          // distinct maximal cones met by samples
    long long membership_checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Sampled certificate that the fan covers the whole space: each pseudo-random
// integer point locates to the interior of exactly one cone of its dimension
// class. Numerators are drawn uniformly from [-1000, 1000].
CompletenessReport check_complete(const LabelSet& B, int samples, std::uint64_t seed);

// Restriction of a vector to a subset of labels, re-canonicalized.
LatticeVector forgetful_vector_map(const LabelSet& B_small, const LatticeVector& chi);
RationalVector forgetful_vector_map(const LabelSet& B_small, const RationalVector& chi);

// Delete forgotten labels from every block, then drop empty blocks.
OrderedSetPartition forgetful_partition_map(const OrderedSetPartition& tau_big,
                                            const LabelSet& B_small);

// Extend chi over B_big = domain(chi) + one extra label, giving the new
// label the value chi(j). Section of the forgetful map.
LatticeVector section_vector_map(int j, const LabelSet& B_big, const LatticeVector& chi);

enum class FiberKind { component, node };

// All partitions over B + {forgotten} lying over tau: the forgotten label
// joins an existing block (component) or forms a singleton block in one of
// the length+1 gaps (node). Exactly 2*length(tau) + 1 strata.
std::vector<std::pair<OrderedSetPartition, FiberKind>> fiber_strata(
    const OrderedSetPartition& tau, int forgotten);

}  // namespace permuto
