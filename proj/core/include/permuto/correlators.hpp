#pragma once

#include <map>
#include <string>
#include <vector>

#include "permuto/linalg.hpp"
#include "permuto/partition.hpp"
#include "permuto/rational.hpp"

namespace permuto {

// Index set of the coefficient superspace: distinct integer labels, each
// even (0) or odd (1). The value space F is all-even; all sign content
// lives on the indices.
class SuperIndexSet {
public:
    SuperIndexSet(std::vector<int> labels, std::vector<int> parities);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<int>& parities() const { return parities_; }
    int parity(int label) const;
    int position(int label) const;  // -1 if absent
    bool all_even() const;

    friend bool operator==(const SuperIndexSet&, const SuperIndexSet&) = default;

private:
    std::vector<int> labels_;    // strictly increasing
    std::vector<int> parities_;  // aligned, 0 or 1
};

// Sign of the permutation induced on the odd entries. `perm` maps output
// position j to input position perm[j] (0-based): the reordered sequence is
// (a_{perm[0]}, a_{perm[1]}, ...). `parities` are those of the input
// sequence.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities);

// Top matrix correlators: values on the one-block partitions, stored on
// sorted index sequences. Lookup of an arbitrary sequence sorts it and
// applies the induced Koszul sign; sequences with a repeated odd index are
// identically zero, as are sequences of odd total parity (F is all-even).
class TopCorrelatorFamily {
public:
    TopCorrelatorFamily(SuperIndexSet indices, int dim, int max_points);

    const SuperIndexSet& index_set() const { return indices_; }
    int dim() const { return dim_; }
    int max_points() const { return max_points_; }

    // seq must be sorted; zero matrices may simply be omitted.
    void set(const std::vector<int>& seq, Matrix value);

    // Value on an arbitrary sequence of 1 <= n <= max_points indices.
    Matrix value(const std::vector<int>& seq) const;

    // Stored nonzero entries (sorted sequences), for serialization.
    const std::map<std::vector<int>, Matrix>& entries() const { return top_; }

    friend bool operator==(const TopCorrelatorFamily&, const TopCorrelatorFamily&) = default;

private:
    SuperIndexSet indices_;
    int dim_;
    int max_points_;
    std::map<std::vector<int>, Matrix> top_;
};

// The family with values <a_1...a_n> = C_{a_1} ... C_{a_n} for pairwise
// commuting matrices (one per index, all indices even). Satisfies the
// quadratic relations by construction.
TopCorrelatorFamily build_from_commuting(const SuperIndexSet& indices,
                                         const std::vector<Matrix>& matrices, int max_points);

// Value of the correlator of (tau, a_1..a_n): the ordered product over the
// blocks of tau of top correlators, times the Koszul sign of regrouping the
// sequence into block order.
Matrix extend_top(const TopCorrelatorFamily& top, const OrderedSetPartition& tau,
                  const std::vector<int>& indices);

struct RelationCheckReport {
    int n_max = 0;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> failure_samples;

    bool ok() const { return failures == 0; }
};

// For every n <= n_max, index tuple, partition of {1..n}, block with at
// least two points and pair i != j in it: the alternating sum over
// two-block splits of the block vanishes as a matrix.
RelationCheckReport check_linear_relations(const TopCorrelatorFamily& top, int n_max,
                                           int max_failure_samples = 5);

// Matrix-coefficient supercommutative polynomial truncated at a total
// degree. Monomials are exponent vectors over the index set; odd exponents
// are at most 1.
class TruncatedSeries {
public:
    TruncatedSeries(SuperIndexSet indices, int dim, int order);

    const SuperIndexSet& index_set() const { return indices_; }
    int dim() const { return dim_; }
    int order() const { return order_; }

    void add_term(const std::vector<int>& exponents, const Matrix& coeff);
    const std::map<std::vector<int>, Matrix>& terms() const { return terms_; }
    Matrix coeff(const std::vector<int>& exponents) const;  // zero when absent

    bool is_zero() const { return terms_.empty(); }
    int term_degree(const std::vector<int>& exponents) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

    // Product with supercommutative monomial normalization, truncated.
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // Left partial derivative by the variable of `label`.
    TruncatedSeries derivative(int label) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    SuperIndexSet indices_;
    int dim_;
    int order_;
    std::map<std::vector<int>, Matrix> terms_;
};

// B = sum over n <= order and index tuples of x^{a_n}...x^{a_1}/n! times
// the top correlator of (a_1..a_n).
TruncatedSeries build_series(const TopCorrelatorFamily& top, int order);

struct CommutativityReport {
    int order_checked = 0;
    long long slots = 0;
    long long failures = 0;
    std::vector<std::string> failure_samples;

    bool ok() const { return failures == 0; }
};

// dB ^ dB = 0 up to total degree `check_order` (default: order - 2). The
// differential is odd; with an all-even value space the slot at (a < b)
// carries (-1)^((p(b)+1)p(a)) dB_a dB_b - (-1)^(p(a)) dB_b dB_a (a
// commutator when the parities agree, an anticommutator when they differ)
// and the diagonal slot of an odd index carries dB_a dB_a.
CommutativityReport check_commutativity(const TruncatedSeries& series, int check_order = -1);

// Read the top correlators back off the series coefficients. Requires every
// nonzero coefficient to sit on an even-parity monomial.
TopCorrelatorFamily top_from_series(const TruncatedSeries& series);

// A formal combination of generators mu(tau) (x) Delta_{a_1} (x) ... with
// rational coefficients, the argument of a representation.
struct CorrelatorTerm {
    OrderedSetPartition tau;
    std::vector<int> indices;
    Rat coeff;
};

Matrix representation_apply(const TopCorrelatorFamily& top,
                            const std::vector<CorrelatorTerm>& element);

}  // namespace permuto
