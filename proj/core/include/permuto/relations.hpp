#pragma once

#include <map>
#include <vector>

#include "permuto/label_set.hpp"
#include "permuto/linalg.hpp"
#include "permuto/partition.hpp"

namespace permuto {

// Coordinates at a fixed grade: the (k+1)-block partitions of B in
// enumeration order. Grade of a monomial/generator indexed by tau is
// length(tau) - 1.
struct GradeBasis {
    std::vector<OrderedSetPartition> partitions;
    std::map<OrderedSetPartition, int> index;
};

const GradeBasis& grade_basis(const LabelSet& B, int grade);

// One linear relation: the alternating sum over two-block splits of block
// `a` of tau separating i from j. The same integer vectors present both the
// ring relations between good monomials and the homology relations between
// the mu generators.
struct RelationSignature {
    OrderedSetPartition tau;
    int a;
    int i;
    int j;
};

// All grade-k relation signatures (tau of length k, a block with >= 2
// elements, unordered pair i < j), deduplicated.
std::vector<RelationSignature> relation_signatures(const LabelSet& B, int grade);

// Coefficient vector of one relation in the grade basis.
std::vector<Rat> relation_vector(const LabelSet& B, const RelationSignature& sig);

// Integer relation matrix at a grade (rows in signature order).
std::vector<std::vector<BigInt>> relation_matrix(const LabelSet& B, int grade);

// Row-reduced span of all grade-k relations; cached per (B, grade) since
// the verification suites query membership thousands of times.
const RowSpan& relation_span(const LabelSet& B, int grade);

}  // namespace permuto
