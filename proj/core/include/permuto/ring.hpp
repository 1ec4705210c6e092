#pragma once

#include <vector>

#include "permuto/formal_sum.hpp"
#include "permuto/label_set.hpp"
#include "permuto/partition.hpp"

namespace permuto {

// Element of the presented cohomology ring written in the spanning set of
// good monomials m(tau). Good monomials are not linearly independent, so
// equality of ring classes is membership of the difference in the cached
// relation span, not structural equality.
struct GoodTag {};
using GoodElement = FormalSum<GoodTag>;

// A monomial in the free generators l_sigma: an unordered list of factors.
using RawMonomial = std::vector<TwoPartition>;

// A relation vector with its provenance (tau, a, i, j).
struct RingRelation {
    GoodElement element;
    RelationSignature signature;
};

// Degree-one defining relation: sum of m(sigma) over 2-partitions with
// i before j, minus the sum over those with j before i.
GoodElement generator_relation_linear(const LabelSet& B, int i, int j);

// Grade-k relation attached to (tau, block a, i != j in that block).
RingRelation relation_good(const OrderedSetPartition& tau, int a, int i, int j);

// l_sigma * e expanded term by term through the break trichotomy:
// between -> alternating expansion with i = min(tau_a), j = min(tau_{a+1});
// at -> single good monomial; no break -> the term dies.
GoodElement multiply_generator(const TwoPartition& sigma, const GoodElement& e);

// The `between` expansion of l_sigma * m(tau) for an explicit admissible
// choice of i in tau_a and j in tau_{a+1}. Different choices agree modulo
// the relation span.
GoodElement ring_between_expansion(const OrderedSetPartition& tau, int a, int i, int j);

// Product in the spanning set: expand the factors of e2 through good
// families and fold multiply_generator over e1.
GoodElement product(const GoodElement& e1, const GoodElement& e2);

// Image of an arbitrary free monomial in the good-monomial spanning set.
GoodElement reduce_raw(const LabelSet& B, const RawMonomial& monomial);

// dim of the grade-k piece: number of (k+1)-partitions minus the exact rank
// of the grade-k relation matrix (fraction-free elimination).
int graded_dimension(const LabelSet& B, int k);

// All graded dimensions k = 0 .. |B|-1.
std::vector<int> graded_dimensions(const LabelSet& B);

// Equality/vanishing as ring classes (modulo the relation span).
bool ring_is_zero(const GoodElement& e);
bool ring_equal(const GoodElement& a, const GoodElement& b);

}  // namespace permuto
