#include "permuto/correlators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permuto {

namespace {

// Stable sorting permutation: perm[j] = input position of the j-th smallest
// label. Equal labels keep their input order.
std::vector<int> sorting_permutation(const std::vector<int>& seq) {
    std::vector<int> perm(seq.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return seq[static_cast<std::size_t>(a)] < seq[static_cast<std::size_t>(b)];
    });
    return perm;
}

std::vector<int> parities_of(const SuperIndexSet& I, const std::vector<int>& seq) {
    std::vector<int> par;
    par.reserve(seq.size());
    for (int label : seq) par.push_back(I.parity(label));
    return par;
}

bool repeated_odd(const SuperIndexSet& I, const std::vector<int>& sorted_seq) {
    for (std::size_t k = 0; k + 1 < sorted_seq.size(); ++k)
        if (sorted_seq[k] == sorted_seq[k + 1] && I.parity(sorted_seq[k]) == 1) return true;
    return false;
}

int total_parity(const SuperIndexSet& I, const std::vector<int>& seq) {
    int p = 0;
    for (int label : seq) p ^= I.parity(label);
    return p;
}

// Sign of sorting the reversed sequence into ascending order, restricted to
// odd labels: the normalization sign of the monomial x^{a_n} ... x^{a_1}.
int reversal_normalization_sign(const SuperIndexSet& I, const std::vector<int>& seq) {
    std::vector<int> odd;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        if (I.parity(*it) == 1) odd.push_back(*it);
    int inversions = 0;
    for (std::size_t p = 0; p < odd.size(); ++p)
        for (std::size_t q = p + 1; q < odd.size(); ++q)
            if (odd[p] > odd[q]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::string seq_to_string(const std::vector<int>& seq) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
    os << ')';
    return os.str();
}

void negate(Matrix& m) { m *= Rat(-1); }

}  // namespace

SuperIndexSet::SuperIndexSet(std::vector<int> labels, std::vector<int> parities) {
    if (labels.size() != parities.size())
        throw std::invalid_argument("SuperIndexSet: label/parity count mismatch");
    if (labels.empty()) throw std::invalid_argument("SuperIndexSet: empty index set");
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return labels[a] < labels[b];
    });
    for (std::size_t k : order) {
        if (parities[k] != 0 && parities[k] != 1)
            throw std::invalid_argument("SuperIndexSet: parity must be 0 or 1");
        if (!labels_.empty() && labels_.back() == labels[k])
            throw std::invalid_argument("SuperIndexSet: duplicate label");
        labels_.push_back(labels[k]);
        parities_.push_back(parities[k]);
    }
}

int SuperIndexSet::position(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

int SuperIndexSet::parity(int label) const {
    const int pos = position(label);
    if (pos < 0) throw std::invalid_argument("SuperIndexSet: unknown label");
    return parities_[static_cast<std::size_t>(pos)];
}

bool SuperIndexSet::all_even() const {
    for (int p : parities_)
        if (p) return false;
    return true;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities) {
    if (perm.size() != parities.size())
        throw std::invalid_argument("koszul_sign: size mismatch");
    std::vector<int> odd_positions;  // input positions of odd entries, in output order
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(parities.size()))
            throw std::invalid_argument("koszul_sign: bad permutation entry");
        if (parities[static_cast<std::size_t>(p)] == 1) odd_positions.push_back(p);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < odd_positions.size(); ++a)
        for (std::size_t b = a + 1; b < odd_positions.size(); ++b)
            if (odd_positions[a] > odd_positions[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

TopCorrelatorFamily::TopCorrelatorFamily(SuperIndexSet indices, int dim, int max_points)
    : indices_(std::move(indices)), dim_(dim), max_points_(max_points) {
    if (dim_ < 1) throw std::invalid_argument("TopCorrelatorFamily: dim must be >= 1");
    if (max_points_ < 1) throw std::invalid_argument("TopCorrelatorFamily: max_points must be >= 1");
}

void TopCorrelatorFamily::set(const std::vector<int>& seq, Matrix value) {
    if (seq.empty() || static_cast<int>(seq.size()) > max_points_)
        throw std::invalid_argument("TopCorrelatorFamily::set: bad sequence length");
    if (!std::is_sorted(seq.begin(), seq.end()))
        throw std::invalid_argument("TopCorrelatorFamily::set: sequence must be sorted");
    for (int label : seq)
        if (indices_.position(label) < 0)
            throw std::invalid_argument("TopCorrelatorFamily::set: unknown index label");
    if (value.rows() != dim_ || value.cols() != dim_)
        throw std::invalid_argument("TopCorrelatorFamily::set: matrix dimension mismatch");
    const bool forced_zero = repeated_odd(indices_, seq) || total_parity(indices_, seq) == 1;
    if (forced_zero && !value.is_zero())
        throw std::invalid_argument(
            "TopCorrelatorFamily::set: value on " + seq_to_string(seq) +
            " must vanish (repeated odd index or odd total parity over an all-even value space)");
    if (value.is_zero())
        top_.erase(seq);
    else
        top_[seq] = std::move(value);
}

Matrix TopCorrelatorFamily::value(const std::vector<int>& seq) const {
    if (seq.empty() || static_cast<int>(seq.size()) > max_points_)
        throw std::out_of_range("TopCorrelatorFamily::value: sequence length beyond family level");
    const auto perm = sorting_permutation(seq);
    std::vector<int> sorted;
    sorted.reserve(seq.size());
    for (int p : perm) sorted.push_back(seq[static_cast<std::size_t>(p)]);
    for (int label : sorted)
        if (indices_.position(label) < 0)
            throw std::invalid_argument("TopCorrelatorFamily::value: unknown index label");
    if (repeated_odd(indices_, sorted)) return Matrix(dim_, dim_);
    auto it = top_.find(sorted);
    if (it == top_.end()) return Matrix(dim_, dim_);
    Matrix out = it->second;
    if (koszul_sign(perm, parities_of(indices_, seq)) < 0) negate(out);
    return out;
}

TopCorrelatorFamily build_from_commuting(const SuperIndexSet& indices,
                                         const std::vector<Matrix>& matrices, int max_points) {
    if (!indices.all_even())
        throw std::invalid_argument("build_from_commuting: indices must all be even");
    if (static_cast<int>(matrices.size()) != indices.size())
        throw std::invalid_argument("build_from_commuting: one matrix per index required");
    const int dim = matrices.empty() ? 1 : matrices.front().rows();
    for (const auto& m : matrices)
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("build_from_commuting: matrices must be square, equal size");
    for (std::size_t a = 0; a < matrices.size(); ++a)
        for (std::size_t b = a + 1; b < matrices.size(); ++b)
            if (!commutator(matrices[a], matrices[b]).is_zero())
                throw std::invalid_argument("build_from_commuting: matrices do not commute");

    TopCorrelatorFamily top(indices, dim, max_points);
    // all sorted tuples (combinations with repetition), value = ordered product
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

Matrix extend_top(const TopCorrelatorFamily& top, const OrderedSetPartition& tau,
                  const std::vector<int>& indices) {
    const int n = static_cast<int>(indices.size());
    if (tau.size() != n || !tau.label_set().is_segment())
        throw std::invalid_argument("extend_top: tau must partition {1..n} for n = #indices");
    // regroup the sequence into block order; entries of tau are positions 1..n
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    for (const auto& block : tau.blocks())
        for (int pos : block) perm.push_back(pos - 1);
    const int sign = koszul_sign(perm, parities_of(top.index_set(), indices));
    Matrix out = Matrix::identity(top.dim());
    for (const auto& block : tau.blocks()) {
        std::vector<int> sub;
        sub.reserve(block.size());
        for (int pos : block) sub.push_back(indices[static_cast<std::size_t>(pos - 1)]);
        out = out * top.value(sub);
        if (out.is_zero()) break;
    }
    if (sign < 0) negate(out);
    return out;
}

namespace {

// Precomputed structure of one linear-relation check at a fixed n: the
// refined partitions with signs, indexed into the partition list.
struct RelationSkeleton {
    int tau_idx;
    int block;
    int i;
    int j;
    std::vector<std::pair<int, int>> terms;  // (partition index, +1/-1)
};

}  // namespace

RelationCheckReport check_linear_relations(const TopCorrelatorFamily& top, int n_max,
                                           int max_failure_samples) {
    if (n_max < 1 || n_max > top.max_points())
        throw std::invalid_argument("check_linear_relations: n_max beyond family level");
    RelationCheckReport rep;
    rep.n_max = n_max;
    const auto& I = top.index_set();
    const int dim = top.dim();
    for (int n = 2; n <= n_max; ++n) {
        const auto partitions = enumerate_partitions(LabelSet::segment(n));
        std::map<OrderedSetPartition, int> index;
        for (std::size_t p = 0; p < partitions.size(); ++p)
            index.emplace(partitions[p], static_cast<int>(p));

        // block-position bitmask and regrouping permutation per partition
        std::vector<std::vector<unsigned>> block_masks(partitions.size());
        std::vector<std::vector<int>> perms(partitions.size());
        for (std::size_t p = 0; p < partitions.size(); ++p) {
            for (const auto& blk : partitions[p].blocks()) {
                unsigned mask = 0;
                for (int pos : blk) {
                    mask |= 1u << (pos - 1);
                    perms[p].push_back(pos - 1);
                }
                block_masks[p].push_back(mask);
            }
        }

        // relation skeletons are tuple independent
        std::vector<RelationSkeleton> skeletons;
        for (std::size_t p = 0; p < partitions.size(); ++p) {
            const auto& tau = partitions[p];
            for (int r = 0; r < tau.length(); ++r) {
                const Block& blk = tau.block(r);
                if (blk.size() < 2) continue;
                for (std::size_t x = 0; x < blk.size(); ++x)
                    for (std::size_t y = x + 1; y < blk.size(); ++y) {
                        RelationSkeleton sk{static_cast<int>(p), r, blk[x], blk[y], {}};
                        for (const auto& alpha : two_partitions_of(blk)) {
                            const auto sep = separates(alpha, blk[x], blk[y]);
                            if (!sep) continue;
                            sk.terms.emplace_back(index.at(refine_at(tau, r, alpha)),
                                                  *sep == SepOrder::i_then_j ? 1 : -1);
                        }
                        skeletons.push_back(std::move(sk));
                    }
            }
        }

        // odometer over index tuples
        std::vector<int> tuple(static_cast<std::size_t>(n), I.labels().front());
        std::vector<int> digit(static_cast<std::size_t>(n), 0);
        std::vector<Matrix> block_value(1u << n);
        std::vector<Matrix> value(partitions.size());
        bool done = false;
        while (!done) {
            const auto parities = parities_of(I, tuple);
            // correlators of position subsets, then of whole partitions
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> sub;
                for (int pos = 0; pos < n; ++pos)
                    if (mask & (1u << pos)) sub.push_back(tuple[static_cast<std::size_t>(pos)]);
                block_value[mask] = top.value(sub);
            }
            for (std::size_t p = 0; p < partitions.size(); ++p) {
                Matrix acc = block_value[block_masks[p].front()];
                for (std::size_t b = 1; b < block_masks[p].size() && !acc.is_zero(); ++b)
                    acc = acc * block_value[block_masks[p][b]];
                if (!acc.is_zero() && koszul_sign(perms[p], parities) < 0) negate(acc);
                value[p] = std::move(acc);
            }
            for (const auto& sk : skeletons) {
                ++rep.cases;
                Matrix sum(dim, dim);
                for (const auto& [idx, sign] : sk.terms) {
                    if (value[static_cast<std::size_t>(idx)].is_zero()) continue;
                    if (sign > 0)
                        sum += value[static_cast<std::size_t>(idx)];
                    else
                        sum -= value[static_cast<std::size_t>(idx)];
                }
                if (!sum.is_zero()) {
                    ++rep.failures;
                    if (static_cast<int>(rep.failure_samples.size()) < max_failure_samples) {
                        std::ostringstream os;
                        os << "n=" << n << " indices=" << seq_to_string(tuple) << " tau="
                           << partitions[static_cast<std::size_t>(sk.tau_idx)].to_string()
                           << " block=" << sk.block << " (i,j)=(" << sk.i << "," << sk.j << ")";
                        rep.failure_samples.push_back(os.str());
                    }
                }
            }
            // advance odometer
            int pos = 0;
            while (pos < n) {
                if (++digit[static_cast<std::size_t>(pos)] < I.size()) {
                    tuple[static_cast<std::size_t>(pos)] =
                        I.labels()[static_cast<std::size_t>(digit[static_cast<std::size_t>(pos)])];
                    break;
                }
                digit[static_cast<std::size_t>(pos)] = 0;
                tuple[static_cast<std::size_t>(pos)] = I.labels().front();
                ++pos;
            }
            done = pos == n;
        }
    }
    return rep;
}

TruncatedSeries::TruncatedSeries(SuperIndexSet indices, int dim, int order)
    : indices_(std::move(indices)), dim_(dim), order_(order) {
    if (dim_ < 1) throw std::invalid_argument("TruncatedSeries: dim must be >= 1");
    if (order_ < 0) throw std::invalid_argument("TruncatedSeries: negative order");
}

int TruncatedSeries::term_degree(const std::vector<int>& exponents) const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

void TruncatedSeries::add_term(const std::vector<int>& exponents, const Matrix& coeff) {
    if (static_cast<int>(exponents.size()) != indices_.size())
        throw std::invalid_argument("TruncatedSeries::add_term: exponent vector size mismatch");
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] < 0) throw std::invalid_argument("TruncatedSeries::add_term: negative exponent");
        if (exponents[k] > 1 &&
            indices_.parity(indices_.labels()[k]) == 1)
            throw std::invalid_argument("TruncatedSeries::add_term: odd variable squared");
    }
    if (term_degree(exponents) > order_) return;  // beyond truncation
    if (coeff.rows() != dim_ || coeff.cols() != dim_)
        throw std::invalid_argument("TruncatedSeries::add_term: matrix dimension mismatch");
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

Matrix TruncatedSeries::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    if (it == terms_.end()) return Matrix(dim_, dim_);
    return it->second;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (indices_ != o.indices_ || dim_ != o.dim_)
        throw std::invalid_argument("TruncatedSeries+: incompatible series");
    order_ = std::min(order_, o.order_);
    std::erase_if(terms_, [&](const auto& kv) { return term_degree(kv.first) > order_; });
    for (const auto& [e, m] : o.terms_)
        if (term_degree(e) <= order_) add_term(e, m);
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (indices_ != o.indices_ || dim_ != o.dim_)
        throw std::invalid_argument("TruncatedSeries*: incompatible series");
    TruncatedSeries out(indices_, dim_, std::min(order_, o.order_));
    const int nvars = indices_.size();
    for (const auto& [e1, m1] : terms_) {
        const int d1 = term_degree(e1);
        for (const auto& [e2, m2] : o.terms_) {
            if (d1 + term_degree(e2) > out.order_) continue;
            // supercommutative merge: odd collision kills the term, otherwise
            // count odd-odd transpositions
            bool dead = false;
            int inversions = 0;
            for (int u = 0; u < nvars && !dead; ++u) {
                if (indices_.parities()[static_cast<std::size_t>(u)] == 0) continue;
                if (e1[static_cast<std::size_t>(u)] && e2[static_cast<std::size_t>(u)]) dead = true;
                if (e2[static_cast<std::size_t>(u)])
                    for (int w = u + 1; w < nvars; ++w)
                        if (indices_.parities()[static_cast<std::size_t>(w)] == 1 &&
                            e1[static_cast<std::size_t>(w)])
                            ++inversions;
            }
            if (dead) continue;
            std::vector<int> merged(e1);
            for (int u = 0; u < nvars; ++u) merged[static_cast<std::size_t>(u)] += e2[static_cast<std::size_t>(u)];
            Matrix prod = m1 * m2;
            if (inversions % 2) negate(prod);
            out.add_term(merged, prod);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::derivative(int label) const {
    const int pos = indices_.position(label);
    if (pos < 0) throw std::invalid_argument("TruncatedSeries::derivative: unknown label");
    TruncatedSeries out(indices_, dim_, std::max(order_ - 1, 0));
    const bool odd = indices_.parity(label) == 1;
    for (const auto& [e, m] : terms_) {
        const int exp = e[static_cast<std::size_t>(pos)];
        if (exp == 0) continue;
        std::vector<int> reduced(e);
        --reduced[static_cast<std::size_t>(pos)];
        Matrix coeff = m;
        if (odd) {
            int before = 0;  // odd variables preceding x^label in the canonical order
            for (int u = 0; u < pos; ++u)
                if (indices_.parities()[static_cast<std::size_t>(u)] == 1 &&
                    e[static_cast<std::size_t>(u)])
                    ++before;
            if (before % 2) negate(coeff);
        } else {
            coeff *= Rat(exp);
        }
        out.add_term(reduced, coeff);
    }
    return out;
}

TruncatedSeries build_series(const TopCorrelatorFamily& top, int order) {
    if (order < 1 || order > top.max_points())
        throw std::invalid_argument("build_series: order beyond family level");
    const auto& I = top.index_set();
    TruncatedSeries out(I, top.dim(), order);
    Rat nfact(1);
    for (int n = 1; n <= order; ++n) {
        nfact *= n;
        // odometer over index tuples of length n
        std::vector<int> digit(static_cast<std::size_t>(n), 0);
        bool done = false;
        while (!done) {
            std::vector<int> tuple;
            tuple.reserve(static_cast<std::size_t>(n));
            for (int d : digit) tuple.push_back(I.labels()[static_cast<std::size_t>(d)]);
            // monomial dies when an odd label repeats
            bool dead = false;
            std::vector<int> exps(static_cast<std::size_t>(I.size()), 0);
            for (int label : tuple) {
                auto& e = exps[static_cast<std::size_t>(I.position(label))];
                if (++e > 1 && I.parity(label) == 1) dead = true;
            }
            if (!dead) {
                Matrix val = top.value(tuple);
                if (!val.is_zero()) {
                    const int kappa = reversal_normalization_sign(I, tuple);
                    val *= Rat(kappa) / nfact;
                    out.add_term(exps, val);
                }
            }
            int pos = 0;
            while (pos < n) {
                if (++digit[static_cast<std::size_t>(pos)] < I.size()) break;
                digit[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            done = pos == n;
        }
    }
    return out;
}

CommutativityReport check_commutativity(const TruncatedSeries& series, int check_order) {
    if (series.order() < 2)
        throw std::invalid_argument("check_commutativity: truncation order must be >= 2");
    if (check_order < 0) check_order = series.order() - 2;
    if (check_order > series.order() - 1)
        throw std::invalid_argument("check_commutativity: order exceeds trusted range");
    CommutativityReport rep;
    rep.order_checked = check_order;
    const auto& I = series.index_set();
    std::vector<TruncatedSeries> partials;
    partials.reserve(static_cast<std::size_t>(I.size()));
    for (int label : I.labels()) partials.push_back(series.derivative(label));

    auto scan = [&](const TruncatedSeries& e, int u, int v) {
        for (const auto& [exps, m] : e.terms()) {
            if (e.term_degree(exps) > check_order) continue;
            if (m.is_zero()) continue;
            ++rep.failures;
            if (static_cast<int>(rep.failure_samples.size()) < 5) {
                std::ostringstream os;
                os << "slot dx" << u << "^dx" << v << " monomial " << seq_to_string(exps);
                rep.failure_samples.push_back(os.str());
            }
        }
    };

    for (int a = 0; a < I.size(); ++a) {
        const int u = I.labels()[static_cast<std::size_t>(a)];
        const int pu = I.parities()[static_cast<std::size_t>(a)];
        if (pu == 1) {  // diagonal slot of an odd variable
            ++rep.slots;
            scan(partials[static_cast<std::size_t>(a)] * partials[static_cast<std::size_t>(a)], u, u);
        }
        for (int b = a + 1; b < I.size(); ++b) {
            const int v = I.labels()[static_cast<std::size_t>(b)];
            const int pv = I.parities()[static_cast<std::size_t>(b)];
            ++rep.slots;
            TruncatedSeries uv =
                partials[static_cast<std::size_t>(a)] * partials[static_cast<std::size_t>(b)];
            TruncatedSeries vu =
                partials[static_cast<std::size_t>(b)] * partials[static_cast<std::size_t>(a)];
            // slot coefficient: (-1)^((p(v)+1)p(u)) dB_u dB_v - (-1)^(p(u)) dB_v dB_u.
            // dx^u and dx^v have parities p+1 (the differential is odd), so
            // equal parities anticommute the slot into a commutator and
            // opposite parities leave an anticommutator.
            const int s1 = ((pv + 1) * pu) % 2 ? -1 : 1;
            const int s2 = pu % 2 ? 1 : -1;
            TruncatedSeries slot(I, series.dim(), std::min(uv.order(), vu.order()));
            for (const auto& [e, m] : uv.terms()) {
                Matrix t = m;
                if (s1 < 0) negate(t);
                slot.add_term(e, t);
            }
            for (const auto& [e, m] : vu.terms()) {
                Matrix t = m;
                if (s2 < 0) negate(t);
                slot.add_term(e, t);
            }
            scan(slot, u, v);
        }
    }
    return rep;
}

TopCorrelatorFamily top_from_series(const TruncatedSeries& series) {
    const auto& I = series.index_set();
    TopCorrelatorFamily top(I, series.dim(), series.order());
    for (const auto& [exps, m] : series.terms()) {
        const int n = series.term_degree(exps);
        if (n == 0)
            throw std::invalid_argument("top_from_series: nonzero constant term");
        int parity = 0;
        for (std::size_t k = 0; k < exps.size(); ++k)
            if (exps[k] % 2) parity ^= I.parities()[k];
        if (parity == 1)
            throw std::invalid_argument(
                "top_from_series: odd-parity monomial " + seq_to_string(exps) +
                " with nonzero coefficient over an all-even value space");
        // sorted tuple of labels with multiplicity
        std::vector<int> tuple;
        for (std::size_t k = 0; k < exps.size(); ++k)
            for (int c = 0; c < exps[k]; ++c) tuple.push_back(I.labels()[k]);
        // forward scale factor: sum over arrangements of kappa * epsilon / n!
        Rat scale(0);
        Rat nfact(1);
        for (int k = 2; k <= n; ++k) nfact *= k;
        std::vector<int> arrangement = tuple;
        do {
            const int kappa = reversal_normalization_sign(I, arrangement);
            const int eps = koszul_sign(sorting_permutation(arrangement),
                                        parities_of(I, arrangement));
            scale += Rat(kappa * eps);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        scale /= nfact;
        if (scale == 0) throw std::logic_error("top_from_series: degenerate normalization");
        Matrix val = m;
        val *= Rat(1) / scale;
        top.set(tuple, std::move(val));
    }
    return top;
}

Matrix representation_apply(const TopCorrelatorFamily& top,
                            const std::vector<CorrelatorTerm>& element) {
    Matrix out(top.dim(), top.dim());
    for (const auto& term : element) {
        Matrix v = extend_top(top, term.tau, term.indices);
        v *= term.coeff;
        out += v;
    }
    return out;
}

}  // namespace permuto
