#include "permuto/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permuto {

namespace {

std::string block_to_string(const Block& b) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) os << ',';
        os << b[i];
    }
    os << '}';
    return os.str();
}

// Nonempty proper subsets of `labels` paired with their complements,
// deterministic order (by size of the first part, then lexicographic).
std::vector<std::pair<Block, Block>> proper_splits(const Block& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::pair<Block, Block>> out;
    if (n < 2) return out;
    out.reserve((std::size_t{1} << n) - 2);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Block sub, rest;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i))
                sub.push_back(labels[static_cast<std::size_t>(i)]);
            else
                rest.push_back(labels[static_cast<std::size_t>(i)]);
        }
        out.emplace_back(std::move(sub), std::move(rest));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

}  // namespace

OrderedSetPartition::OrderedSetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("OrderedSetPartition: no blocks");
    std::set<int> seen;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("OrderedSetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 0) throw std::invalid_argument("OrderedSetPartition: negative label");
            if (!seen.insert(x).second)
                throw std::invalid_argument("OrderedSetPartition: blocks not disjoint");
        }
    }
}

OrderedSetPartition OrderedSetPartition::single(const LabelSet& B) {
    return OrderedSetPartition({B.labels()});
}

LabelSet OrderedSetPartition::label_set() const {
    std::vector<int> all;
    for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
    return LabelSet(std::move(all));
}

int OrderedSetPartition::size() const {
    int n = 0;
    for (const auto& b : blocks_) n += static_cast<int>(b.size());
    return n;
}

int OrderedSetPartition::block_index_of(int label) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), label))
            return static_cast<int>(i);
    throw std::invalid_argument("block_index_of: label " + std::to_string(label) + " not present");
}

std::string OrderedSetPartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << ',';
        os << block_to_string(blocks_[i]);
    }
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.blocks_ <=> b.blocks_;
}

TwoPartition::TwoPartition(Block first, Block second)
    : part_(OrderedSetPartition({std::move(first), std::move(second)})) {}

TwoPartition::TwoPartition(OrderedSetPartition p) : part_(std::move(p)) {
    if (part_.length() != 2) throw std::invalid_argument("TwoPartition: length must be 2");
}

std::vector<OrderedSetPartition> enumerate_partitions(const LabelSet& B) {
    std::vector<OrderedSetPartition> out;
    std::vector<Block> current;
    // first block = any nonempty subset, recurse on the complement
    auto rec = [&](auto&& self, const Block& rest) -> void {
        if (rest.empty()) {
            out.emplace_back(current);
            return;
        }
        const int n = static_cast<int>(rest.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Block head, tail;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i))
                    head.push_back(rest[static_cast<std::size_t>(i)]);
                else
                    tail.push_back(rest[static_cast<std::size_t>(i)]);
            }
            current.push_back(std::move(head));
            self(self, tail);
            current.pop_back();
        }
    };
    rec(rec, B.labels());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrderedSetPartition> enumerate_partitions_of_length(const LabelSet& B, int len) {
    std::vector<OrderedSetPartition> out;
    for (auto& p : enumerate_partitions(B))
        if (p.length() == len) out.push_back(std::move(p));
    return out;
}

std::vector<TwoPartition> two_partitions_of(const Block& labels) {
    std::vector<TwoPartition> out;
    for (auto& [sub, rest] : proper_splits(labels)) out.emplace_back(sub, rest);
    return out;
}

std::vector<TwoPartition> two_partitions(const LabelSet& B) {
    return two_partitions_of(B.labels());
}

bool refines(const OrderedSetPartition& tau, const OrderedSetPartition& sigma) {
    if (tau.label_set() != sigma.label_set())
        throw std::invalid_argument("refines: partitions over different label sets");
    // Walk tau's blocks, grouping them against sigma's blocks in order.
    int s = 0;
    std::size_t filled = 0;
    for (int t = 0; t < tau.length(); ++t) {
        if (s >= sigma.length()) return false;
        const Block& target = sigma.block(s);
        for (int x : tau.block(t))
            if (!std::binary_search(target.begin(), target.end(), x)) return false;
        filled += tau.block(t).size();
        if (filled == target.size()) {
            ++s;
            filled = 0;
        }
    }
    return s == sigma.length() && filled == 0;
}

std::optional<SepOrder> separates(const TwoPartition& sigma, int i, int j) {
    if (i == j) throw std::invalid_argument("separates: i == j");
    const bool i1 = std::binary_search(sigma.first().begin(), sigma.first().end(), i);
    const bool j1 = std::binary_search(sigma.first().begin(), sigma.first().end(), j);
    if (!i1 && !sigma.label_set().contains(i))
        throw std::invalid_argument("separates: i not in label set");
    if (!j1 && !sigma.label_set().contains(j))
        throw std::invalid_argument("separates: j not in label set");
    if (i1 == j1) return std::nullopt;
    return i1 ? SepOrder::i_then_j : SepOrder::j_then_i;
}

std::vector<TwoPartition> good_family(const OrderedSetPartition& tau) {
    std::vector<TwoPartition> fam;
    const int N = tau.length() - 1;
    Block head;
    for (int a = 0; a < N; ++a) {
        head.insert(head.end(), tau.block(a).begin(), tau.block(a).end());
        std::sort(head.begin(), head.end());
        Block rest;
        for (int b = a + 1; b <= N; ++b)
            rest.insert(rest.end(), tau.block(b).begin(), tau.block(b).end());
        fam.emplace_back(head, rest);
    }
    return fam;
}

OrderedSetPartition partition_from_good_family(std::vector<TwoPartition> family) {
    if (family.empty())
        throw std::invalid_argument("partition_from_good_family: empty family (ground set unknown)");
    const LabelSet B = family.front().label_set();
    for (const auto& s : family)
        if (s.label_set() != B)
            throw std::invalid_argument("partition_from_good_family: mixed label sets");
    std::sort(family.begin(), family.end(), [](const TwoPartition& a, const TwoPartition& b) {
        if (a.first().size() != b.first().size()) return a.first().size() < b.first().size();
        return a.first() < b.first();
    });
    for (std::size_t i = 0; i + 1 < family.size(); ++i) {
        const Block& lo = family[i].first();
        const Block& hi = family[i + 1].first();
        if (lo == hi)
            throw std::invalid_argument("partition_from_good_family: duplicate members " +
                                        family[i].to_string() + " and " + family[i + 1].to_string());
        if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()))
            throw std::invalid_argument("partition_from_good_family: incomparable first blocks in " +
                                        family[i].to_string() + " and " + family[i + 1].to_string());
    }
    std::vector<Block> blocks;
    Block prev;
    for (const auto& s : family) {
        Block diff;
        std::set_difference(s.first().begin(), s.first().end(), prev.begin(), prev.end(),
                            std::back_inserter(diff));
        blocks.push_back(std::move(diff));
        prev = s.first();
    }
    blocks.push_back(family.back().second());
    return OrderedSetPartition(std::move(blocks));
}

BreakClassification classify_break(const TwoPartition& sigma, const OrderedSetPartition& tau) {
    if (sigma.label_set() != tau.label_set())
        throw std::invalid_argument("classify_break: mismatched label sets");
    const Block& s1 = sigma.first();
    const int N = tau.length();
    // 2 = block inside sigma_1, 0 = disjoint from sigma_1, 1 = proper overlap
    std::vector<int> code(static_cast<std::size_t>(N));
    for (int b = 0; b < N; ++b) {
        const Block& blk = tau.block(b);
        std::size_t inter = 0;
        for (int x : blk)
            if (std::binary_search(s1.begin(), s1.end(), x)) ++inter;
        code[static_cast<std::size_t>(b)] = inter == 0 ? 0 : (inter == blk.size() ? 2 : 1);
    }
    // between: (2..2 0..0), at: (2..2 1 0..0) including (1 0..0)
    int b = 0;
    while (b < N && code[static_cast<std::size_t>(b)] == 2) ++b;
    const int twos = b;
    const bool has_one = b < N && code[static_cast<std::size_t>(b)] == 1;
    if (has_one) ++b;
    bool zeros_after = true;
    for (int k = b; k < N; ++k)
        if (code[static_cast<std::size_t>(k)] != 0) zeros_after = false;
    if (zeros_after) {
        if (!has_one) return BreakClassification::between(twos - 1);  // code is 2^a 0^(N-a), a >= 1
        const Block& blk = tau.block(twos);
        Block in, out;
        for (int x : blk)
            (std::binary_search(s1.begin(), s1.end(), x) ? in : out).push_back(x);
        return BreakClassification::at(twos, TwoPartition(std::move(in), std::move(out)));
    }
    // first bad pair: tau_b not inside sigma_1 and tau_{b+1} meets sigma_1
    for (int k = 0; k + 1 < N; ++k)
        if (code[static_cast<std::size_t>(k)] != 2 && code[static_cast<std::size_t>(k + 1)] != 0)
            return BreakClassification::no_break(k);
    throw std::logic_error("classify_break: trichotomy failure");  // unreachable
}

OrderedSetPartition star(const TwoPartition& sigma, const OrderedSetPartition& tau) {
    auto cls = classify_break(sigma, tau);
    if (cls.kind != BreakClassification::Kind::at)
        throw std::invalid_argument("star undefined: " + sigma.to_string() + " does not break " +
                                    tau.to_string() + " at a block");
    return refine_at(tau, cls.index, *cls.alpha);
}

OrderedSetPartition refine_at(const OrderedSetPartition& tau, int a, const TwoPartition& alpha) {
    if (a < 0 || a >= tau.length()) throw std::invalid_argument("refine_at: block index out of range");
    Block joined = alpha.first();
    joined.insert(joined.end(), alpha.second().begin(), alpha.second().end());
    std::sort(joined.begin(), joined.end());
    if (joined != tau.block(a))
        throw std::invalid_argument("refine_at: " + alpha.to_string() +
                                    " does not partition block " + block_to_string(tau.block(a)));
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(tau.length()) + 1);
    for (int b = 0; b < tau.length(); ++b) {
        if (b == a) {
            blocks.push_back(alpha.first());
            blocks.push_back(alpha.second());
        } else {
            blocks.push_back(tau.block(b));
        }
    }
    return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition concatenate(const OrderedSetPartition& tau1, const OrderedSetPartition& tau2) {
    if (!tau1.label_set().is_segment() || !tau2.label_set().is_segment())
        throw std::invalid_argument("concatenate: label sets must be integer segments {1..n}");
    const int m = tau1.size();
    std::vector<Block> blocks = tau1.blocks();
    for (const auto& b : tau2.blocks()) {
        Block shifted;
        shifted.reserve(b.size());
        for (int x : b) shifted.push_back(x + m);
        blocks.push_back(std::move(shifted));
    }
    return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition apply_permutation(const std::vector<int>& s, const OrderedSetPartition& tau) {
    const int n = tau.size();
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("apply_permutation: size mismatch");
    if (!tau.label_set().is_segment())
        throw std::invalid_argument("apply_permutation: labels must be {1..n}");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : s) {
        if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("apply_permutation: not a permutation of {1..n}");
        hit[static_cast<std::size_t>(v - 1)] = true;
    }
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(tau.length()));
    for (const auto& b : tau.blocks()) {
        Block img;
        img.reserve(b.size());
        for (int x : b) img.push_back(s[static_cast<std::size_t>(x - 1)]);
        blocks.push_back(std::move(img));
    }
    return OrderedSetPartition(std::move(blocks));
}

}  // namespace permuto
