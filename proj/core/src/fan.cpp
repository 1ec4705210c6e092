#include "permuto/fan.hpp"

#include "permuto/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permuto {

Cone cone_of(const OrderedSetPartition& tau) {
    const LabelSet B = tau.label_set();
    std::vector<LatticeVector> gens;
    LatticeVector acc = LatticeVector::zero(B);
    for (int a = 0; a + 1 < tau.length(); ++a) {
        acc += LatticeVector::indicator(B, tau.block(a));
        gens.push_back(acc);
    }
    return Cone{tau, std::move(gens)};
}

OrderedSetPartition locate(const RationalVector& chi) {
    const LabelSet& B = chi.domain();
    std::map<Rat, Block, std::greater<Rat>> levels;  // decreasing values
    for (int label : B.labels()) levels[chi.value(label)].push_back(label);
    std::vector<Block> blocks;
    blocks.reserve(levels.size());
    for (auto& [v, blk] : levels) blocks.push_back(std::move(blk));
    return OrderedSetPartition(std::move(blocks));
}

Membership membership(const RationalVector& chi, const Cone& cone) {
    const LabelSet& B = chi.domain();
    if (B != cone.tau.label_set())
        throw std::invalid_argument("membership: label set mismatch");
    // Coordinates: values at all labels but the largest (canonically 0 there).
    const std::size_t dim = static_cast<std::size_t>(B.size()) - 1;
    std::vector<std::vector<Rat>> cols;
    cols.reserve(cone.generators.size());
    for (const auto& g : cone.generators) {
        std::vector<Rat> col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = g.values()[i];
        cols.push_back(std::move(col));
    }
    std::vector<Rat> rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) rhs[i] = chi.values()[i];
    auto coeffs = solve_in_column_span(cols, rhs);
    if (!coeffs) return Membership::outside;
    bool has_zero = false;
    for (const auto& c : *coeffs) {
        if (c < 0) return Membership::outside;
        if (c == 0) has_zero = true;
    }
    return has_zero ? Membership::boundary : Membership::interior;
}

Membership membership(const RationalVector& chi, const OrderedSetPartition& tau) {
    return membership(chi, cone_of(tau));
}

bool is_face(const OrderedSetPartition& tau_face, const OrderedSetPartition& tau) {
    return refines(tau, tau_face);
}

OrderedSetPartition intersect_cones(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    if (a.label_set() != b.label_set())
        throw std::invalid_argument("intersect_cones: label set mismatch");
    auto fa = good_family(a);
    auto fb = good_family(b);
    std::set<TwoPartition> sb(fb.begin(), fb.end());
    std::vector<TwoPartition> common;
    for (const auto& s : fa)
        if (sb.count(s)) common.push_back(s);
    if (common.empty()) return OrderedSetPartition::single(a.label_set());
    return partition_from_good_family(std::move(common));
}

std::vector<std::int64_t> elementary_divisors(std::vector<std::vector<std::int64_t>> m) {
    using I = std::int64_t;
    std::vector<I> divisors;
    if (m.empty() || m[0].empty()) return divisors;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t top = 0;
    while (top < rows && top < cols) {
        // pivot: nonzero entry of smallest magnitude in the remaining block
        std::size_t pr = top, pc = top;
        bool found = false;
        for (std::size_t r = top; r < rows; ++r)
            for (std::size_t c = top; c < cols; ++c) {
                const I v = m[r][c] < 0 ? -m[r][c] : m[r][c];
                if (v == 0) continue;
                const I best = m[pr][pc] < 0 ? -m[pr][pc] : m[pr][pc];
                if (!found || v < best) {
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[top], m[pr]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][top], m[r][pc]);
        // reduce the pivot row and column; each pass either clears them or
        // strictly shrinks |pivot|, so this terminates
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = top + 1; r < rows; ++r) {
                if (m[r][top] == 0) continue;
                const I q = m[r][top] / m[top][top];
                for (std::size_t c = top; c < cols; ++c) m[r][c] -= q * m[top][c];
                if (m[r][top] != 0) {  // remainder became the smaller pivot
                    std::swap(m[top], m[r]);
                    clean = false;
                }
            }
            for (std::size_t c = top + 1; c < cols; ++c) {
                if (m[top][c] == 0) continue;
                const I q = m[top][c] / m[top][top];
                for (std::size_t r = top; r < rows; ++r) m[r][c] -= q * m[r][top];
                if (m[top][c] != 0) {
                    for (std::size_t r = top; r < rows; ++r) std::swap(m[r][c], m[r][top]);
                    clean = false;
                }
            }
        }
        divisors.push_back(m[top][top] < 0 ? -m[top][top] : m[top][top]);
        ++top;
    }
    // normalize into divisibility order d1 | d2 | ...
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            const I g = std::gcd(divisors[i], divisors[j]);
            if (g == 0) continue;
            const I l = divisors[i] / g * divisors[j];
            divisors[i] = g;
            divisors[j] = l;
        }
    return divisors;
}

bool unimodular(const std::vector<LatticeVector>& generators) {
    if (generators.empty()) return true;
    const std::size_t dim = generators.front().values().size() - 1;
    std::vector<std::vector<std::int64_t>> m;
    m.reserve(generators.size());
    for (const auto& g : generators) {
        std::vector<std::int64_t> row(dim);
        for (std::size_t i = 0; i < dim; ++i) row[i] = g.values()[i];
        m.push_back(std::move(row));
    }
    const auto div = elementary_divisors(std::move(m));
    if (div.size() != generators.size()) return false;  // rank deficient
    for (auto d : div)
        if (d != 1) return false;
    return true;
}

bool check_smooth(const OrderedSetPartition& tau) { return unimodular(cone_of(tau).generators); }

CompletenessReport check_complete(const LabelSet& B, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("check_complete: samples must be >= 1");
    CompletenessReport rep;
    rep.n = B.size();
    rep.samples = samples;
    rep.seed = seed;

    // Cones of each dimension class, indexed by partition length.
    auto all = enumerate_partitions(B);
    std::map<int, std::vector<Cone>> by_length;
    for (const auto& p : all) by_length[p.length()].push_back(cone_of(p));
    rep.maximal_cones_total = static_cast<long long>(by_length[B.size()].size());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    std::set<OrderedSetPartition> maximal_hit;

    for (int s = 0; s < samples; ++s) {
        std::vector<Rat> vals;
        vals.reserve(static_cast<std::size_t>(B.size()));
        for (int i = 0; i < B.size(); ++i) vals.emplace_back(dist(rng));
        const RationalVector chi(B, std::move(vals));
        const OrderedSetPartition tau = locate(chi);
        if (membership(chi, tau) != Membership::interior) {
            std::ostringstream os;
            os << "sample " << s << ": located cone " << tau.to_string() << " is not interior";
            rep.failures.push_back(os.str());
            continue;
        }
        if (tau.length() == B.size()) maximal_hit.insert(tau);
        for (const auto& cone : by_length[tau.length()]) {
            if (cone.tau == tau) continue;
            ++rep.membership_checks;
            if (membership(chi, cone) == Membership::interior) {
                std::ostringstream os;
                os << "sample " << s << ": interior of both " << tau.to_string() << " and "
                   << cone.tau.to_string();
                rep.failures.push_back(os.str());
            }
        }
    }
    rep.maximal_cones_hit = static_cast<int>(maximal_hit.size());
    return rep;
}

LatticeVector forgetful_vector_map(const LabelSet& B_small, const LatticeVector& chi) {
    if (!B_small.subset_of(chi.domain()))
        throw std::invalid_argument("forgetful_vector_map: not a subset");
    std::vector<std::int64_t> vals;
    vals.reserve(static_cast<std::size_t>(B_small.size()));
    for (int label : B_small.labels()) vals.push_back(chi.value(label));
    return LatticeVector(B_small, std::move(vals));
}

RationalVector forgetful_vector_map(const LabelSet& B_small, const RationalVector& chi) {
    if (!B_small.subset_of(chi.domain()))
        throw std::invalid_argument("forgetful_vector_map: not a subset");
    std::vector<Rat> vals;
    vals.reserve(static_cast<std::size_t>(B_small.size()));
    for (int label : B_small.labels()) vals.push_back(chi.value(label));
    return RationalVector(B_small, std::move(vals));
}

OrderedSetPartition forgetful_partition_map(const OrderedSetPartition& tau_big,
                                            const LabelSet& B_small) {
    if (!B_small.subset_of(tau_big.label_set()))
        throw std::invalid_argument("forgetful_partition_map: not a subset");
    std::vector<Block> blocks;
    for (const auto& b : tau_big.blocks()) {
        Block kept;
        for (int x : b)
            if (B_small.contains(x)) kept.push_back(x);
        if (!kept.empty()) blocks.push_back(std::move(kept));
    }
    return OrderedSetPartition(std::move(blocks));
}

LatticeVector section_vector_map(int j, const LabelSet& B_big, const LatticeVector& chi) {
    const LabelSet& B_small = chi.domain();
    if (!B_small.contains(j)) throw std::invalid_argument("section_vector_map: j not in domain");
    if (!B_small.subset_of(B_big) || B_big.size() != B_small.size() + 1)
        throw std::invalid_argument("section_vector_map: B_big must add exactly one label");
    std::vector<std::int64_t> vals;
    vals.reserve(static_cast<std::size_t>(B_big.size()));
    for (int label : B_big.labels())
        vals.push_back(B_small.contains(label) ? chi.value(label) : chi.value(j));
    return LatticeVector(B_big, std::move(vals));
}

std::vector<std::pair<OrderedSetPartition, FiberKind>> fiber_strata(
    const OrderedSetPartition& tau, int forgotten) {
    if (tau.label_set().contains(forgotten))
        throw std::invalid_argument("fiber_strata: forgotten label already present");
    std::vector<std::pair<OrderedSetPartition, FiberKind>> out;
    const int l = tau.length();
    for (int a = 0; a < l; ++a) {
        std::vector<Block> blocks = tau.blocks();
        blocks[static_cast<std::size_t>(a)].push_back(forgotten);
        out.emplace_back(OrderedSetPartition(std::move(blocks)), FiberKind::component);
    }
    for (int gap = 0; gap <= l; ++gap) {
        std::vector<Block> blocks = tau.blocks();
        blocks.insert(blocks.begin() + gap, Block{forgotten});
        out.emplace_back(OrderedSetPartition(std::move(blocks)), FiberKind::node);
    }
    return out;
}

}  // namespace permuto
