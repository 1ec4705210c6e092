#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "permuto/label_set.hpp"

namespace permuto {

// A block is a nonempty set of labels, stored sorted ascending.
using Block = std::vector<int>;

// An ordered set partition of a label set: a sequence of disjoint nonempty
// blocks whose union is the whole set. Block order is structural; the order
// of labels inside a block is not (canonical form keeps them ascending).
//
// Block indices are 0-based throughout the library.
class OrderedSetPartition {
public:
    explicit OrderedSetPartition(std::vector<Block> blocks);

    // The trivial 1-partition (B).
    static OrderedSetPartition single(const LabelSet& B);

    int length() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int idx) const { return blocks_.at(static_cast<std::size_t>(idx)); }
    const std::vector<Block>& blocks() const { return blocks_; }

    LabelSet label_set() const;
    int size() const;  // total number of labels
    // 0-based index of the block containing `label`; throws if absent.
    int block_index_of(int label) const;

    // e.g. "({1,2},{3})"
    std::string to_string() const;

    friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
    // Enumeration order: shorter partitions first, then block-by-block
    // lexicographic. std::map keyed by partitions iterates in this order.
    friend std::strong_ordering operator<=>(const OrderedSetPartition& a,
                                            const OrderedSetPartition& b);

private:
    std::vector<Block> blocks_;
};

// An ordered set partition with exactly two blocks (sigma_1, sigma_2).
class TwoPartition {
public:
    TwoPartition(Block first, Block second);
    explicit TwoPartition(OrderedSetPartition p);

    const Block& first() const { return part_.block(0); }
    const Block& second() const { return part_.block(1); }
    const OrderedSetPartition& as_partition() const { return part_; }
    LabelSet label_set() const { return part_.label_set(); }
    std::string to_string() const { return part_.to_string(); }

    friend bool operator==(const TwoPartition&, const TwoPartition&) = default;
    friend std::strong_ordering operator<=>(const TwoPartition& a, const TwoPartition& b) {
        return a.part_ <=> b.part_;
    }

private:
    OrderedSetPartition part_;
};

// Trichotomy for how a 2-partition sigma interacts with a partition tau:
//   between: sigma equals good_family(tau)[index]          (sigma divides m(tau))
//   at:      sigma splits block `index` into `alpha`       (sigma * tau is defined)
//   no_break: neither; (index, index+1) is the first bad pair.
struct BreakClassification {
    enum class Kind { between, at, no_break };
    Kind kind;
    int index = -1;
    std::optional<TwoPartition> alpha;  // set iff kind == at

    static BreakClassification between(int a) { return {Kind::between, a, std::nullopt}; }
    static BreakClassification at(int a, TwoPartition alpha) {
        return {Kind::at, a, std::move(alpha)};
    }
    static BreakClassification no_break(int b) { return {Kind::no_break, b, std::nullopt}; }
};

// All ordered set partitions of B, deterministic order (by length, then
// lexicographic). The count is the Fubini number of |B|.
std::vector<OrderedSetPartition> enumerate_partitions(const LabelSet& B);
std::vector<OrderedSetPartition> enumerate_partitions_of_length(const LabelSet& B, int len);

// All 2^(|B|) - 2 ordered two-block partitions of B (resp. of one block).
std::vector<TwoPartition> two_partitions(const LabelSet& B);
std::vector<TwoPartition> two_partitions_of(const Block& labels);

// tau <= sigma: tau is obtained from sigma by replacing each block of sigma
// by an ordered partition of it, keeping the groups contiguous.
bool refines(const OrderedSetPartition& tau, const OrderedSetPartition& sigma);

enum class SepOrder { i_then_j, j_then_i };

// Which way sigma separates i and j; nullopt when they share a block.
std::optional<SepOrder> separates(const TwoPartition& sigma, int i, int j);

// The nested family sigma^(a) with first blocks tau_1 ∪ ... ∪ tau_a,
// a = 1..length-1. Empty for the 1-partition.
std::vector<TwoPartition> good_family(const OrderedSetPartition& tau);

// Inverse of good_family: consecutive differences of the nested first
// blocks. Validates goodness (distinct, first blocks totally ordered by
// inclusion); throws identifying the offending pair otherwise.
OrderedSetPartition partition_from_good_family(std::vector<TwoPartition> family);

BreakClassification classify_break(const TwoPartition& sigma, const OrderedSetPartition& tau);

// sigma * tau, defined only in the `at` case of classify_break.
OrderedSetPartition star(const TwoPartition& sigma, const OrderedSetPartition& tau);

// tau with block a replaced by the two blocks of alpha (alpha must
// partition exactly that block). Total version of star.
OrderedSetPartition refine_at(const OrderedSetPartition& tau, int a, const TwoPartition& alpha);

// Blocks of tau1 followed by blocks of tau2 shifted by |tau1|'s ground set.
// Both partitions must live on integer segments {1..m}, {1..n}.
OrderedSetPartition concatenate(const OrderedSetPartition& tau1, const OrderedSetPartition& tau2);

// Relabel by a permutation of {1..n}: s[i-1] is the image of label i.
// Block r of the result is the image of block r of tau.
OrderedSetPartition apply_permutation(const std::vector<int>& s, const OrderedSetPartition& tau);

}  // namespace permuto
