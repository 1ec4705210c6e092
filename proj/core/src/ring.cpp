#include "permuto/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace permuto {

namespace {

// Expansion of a generator already dividing the monomial: for a break
// between blocks a and a+1, sum over splits of tau_a keeping i in the first
// part and splits of tau_{a+1} keeping j in the second part, all negated.
GoodElement between_expansion(const OrderedSetPartition& tau, int a, int i, int j) {
    GoodElement out(tau.label_set());
    for (const auto& alpha : two_partitions_of(tau.block(a))) {
        if (!std::binary_search(alpha.first().begin(), alpha.first().end(), i)) continue;
        out.add(refine_at(tau, a, alpha), Rat(-1));
    }
    for (const auto& beta : two_partitions_of(tau.block(a + 1))) {
        if (!std::binary_search(beta.second().begin(), beta.second().end(), j)) continue;
        out.add(refine_at(tau, a + 1, beta), Rat(-1));
    }
    return out;
}

}  // namespace

GoodElement generator_relation_linear(const LabelSet& B, int i, int j) {
    if (i == j) throw std::invalid_argument("generator_relation_linear: i == j");
    GoodElement out(B);
    for (const auto& sigma : two_partitions(B)) {
        const auto sep = separates(sigma, i, j);
        if (!sep) continue;
        out.add(sigma.as_partition(), *sep == SepOrder::i_then_j ? Rat(1) : Rat(-1));
    }
    return out;
}

RingRelation relation_good(const OrderedSetPartition& tau, int a, int i, int j) {
    if (a < 0 || a >= tau.length()) throw std::invalid_argument("relation_good: block out of range");
    const Block& blk = tau.block(a);
    if (i == j || !std::binary_search(blk.begin(), blk.end(), i) ||
        !std::binary_search(blk.begin(), blk.end(), j))
        throw std::invalid_argument("relation_good: i, j must be distinct elements of the block");
    GoodElement out(tau.label_set());
    for (const auto& alpha : two_partitions_of(blk)) {
        const auto sep = separates(alpha, i, j);
        if (!sep) continue;
        out.add(refine_at(tau, a, alpha), *sep == SepOrder::i_then_j ? Rat(1) : Rat(-1));
    }
    return {out, RelationSignature{tau, a, i, j}};
}

GoodElement ring_between_expansion(const OrderedSetPartition& tau, int a, int i, int j) {
    if (a < 0 || a + 1 >= tau.length())
        throw std::invalid_argument("ring_between_expansion: no block pair at index");
    const Block& ba = tau.block(a);
    const Block& bb = tau.block(a + 1);
    if (!std::binary_search(ba.begin(), ba.end(), i) ||
        !std::binary_search(bb.begin(), bb.end(), j))
        throw std::invalid_argument("ring_between_expansion: i, j not in the adjacent blocks");
    return between_expansion(tau, a, i, j);
}

GoodElement multiply_generator(const TwoPartition& sigma, const GoodElement& e) {
    GoodElement out(e.label_set());
    for (const auto& [tau, coeff] : e.terms()) {
        const auto cls = classify_break(sigma, tau);
        switch (cls.kind) {
            case BreakClassification::Kind::at:
                out.add(refine_at(tau, cls.index, *cls.alpha), coeff);
                break;
            case BreakClassification::Kind::between: {
                const int a = cls.index;
                GoodElement expansion =
                    between_expansion(tau, a, tau.block(a).front(), tau.block(a + 1).front());
                expansion *= coeff;
                out += expansion;
                break;
            }
            case BreakClassification::Kind::no_break:
                break;  // the quadratic relations kill the term
        }
    }
    return out;
}

GoodElement product(const GoodElement& e1, const GoodElement& e2) {
    if (e1.label_set() != e2.label_set()) throw std::invalid_argument("product: label set mismatch");
    GoodElement out(e1.label_set());
    for (const auto& [tau2, c2] : e2.terms()) {
        GoodElement acc = e1;
        for (const auto& sigma : good_family(tau2)) acc = multiply_generator(sigma, acc);
        acc *= c2;
        out += acc;
    }
    return out;
}

GoodElement reduce_raw(const LabelSet& B, const RawMonomial& monomial) {
    GoodElement acc = GoodElement::unit(B);
    for (const auto& sigma : monomial) {
        if (sigma.label_set() != B) throw std::invalid_argument("reduce_raw: label set mismatch");
        acc = multiply_generator(sigma, acc);
    }
    return acc;
}

int graded_dimension(const LabelSet& B, int k) {
    if (k < 0 || k > B.size() - 1) return 0;
    const auto& basis = grade_basis(B, k);
    const int monomials = static_cast<int>(basis.partitions.size());
    if (k == 0) return monomials;  // just the unit
    return monomials - rank_bareiss(relation_matrix(B, k));
}

std::vector<int> graded_dimensions(const LabelSet& B) {
    std::vector<int> dims;
    dims.reserve(static_cast<std::size_t>(B.size()));
    for (int k = 0; k < B.size(); ++k) dims.push_back(graded_dimension(B, k));
    return dims;
}

bool ring_is_zero(const GoodElement& e) { return in_relation_span(e); }

bool ring_equal(const GoodElement& a, const GoodElement& b) { return ring_is_zero(a - b); }

}  // namespace permuto
