#include "permuto/relations.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace permuto {

namespace {

using Key = std::pair<std::vector<int>, int>;

std::mutex basis_mutex;
std::mutex span_mutex;

}  // namespace

const GradeBasis& grade_basis(const LabelSet& B, int grade) {
    static std::map<Key, GradeBasis> cache;
    if (grade < 0 || grade > B.size() - 1) throw std::invalid_argument("grade_basis: grade out of range");
    const Key key{B.labels(), grade};
    {
        std::lock_guard<std::mutex> lock(basis_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    GradeBasis basis;
    basis.partitions = enumerate_partitions_of_length(B, grade + 1);
    for (std::size_t i = 0; i < basis.partitions.size(); ++i)
        basis.index.emplace(basis.partitions[i], static_cast<int>(i));
    std::lock_guard<std::mutex> lock(basis_mutex);
    return cache.emplace(key, std::move(basis)).first->second;
}

std::vector<RelationSignature> relation_signatures(const LabelSet& B, int grade) {
    std::vector<RelationSignature> sigs;
    if (grade < 1 || grade > B.size() - 1) return sigs;  // no relations at grade 0
    for (const auto& tau : enumerate_partitions_of_length(B, grade)) {
        for (int a = 0; a < tau.length(); ++a) {
            const Block& blk = tau.block(a);
            if (blk.size() < 2) continue;
            for (std::size_t x = 0; x < blk.size(); ++x)
                for (std::size_t y = x + 1; y < blk.size(); ++y)
                    sigs.push_back({tau, a, blk[x], blk[y]});
        }
    }
    return sigs;
}

std::vector<Rat> relation_vector(const LabelSet& B, const RelationSignature& sig) {
    const int grade = sig.tau.length();
    const GradeBasis& basis = grade_basis(B, grade);
    std::vector<Rat> vec(basis.partitions.size(), Rat(0));
    for (const auto& alpha : two_partitions_of(sig.tau.block(sig.a))) {
        const auto sep = separates(alpha, sig.i, sig.j);
        if (!sep) continue;
        const auto refined = refine_at(sig.tau, sig.a, alpha);
        const int idx = basis.index.at(refined);
        vec[static_cast<std::size_t>(idx)] += (*sep == SepOrder::i_then_j) ? 1 : -1;
    }
    return vec;
}

std::vector<std::vector<BigInt>> relation_matrix(const LabelSet& B, int grade) {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& sig : relation_signatures(B, grade)) {
        const auto vec = relation_vector(B, sig);
        std::vector<BigInt> row;
        row.reserve(vec.size());
        for (const auto& x : vec) row.push_back(numerator(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

const RowSpan& relation_span(const LabelSet& B, int grade) {
    static std::map<Key, RowSpan> cache;
    if (grade < 0 || grade > B.size() - 1)
        throw std::invalid_argument("relation_span: grade out of range");
    const Key key{B.labels(), grade};
    {
        std::lock_guard<std::mutex> lock(span_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& sig : relation_signatures(B, grade)) rows.push_back(relation_vector(B, sig));
    const int dim = static_cast<int>(grade_basis(B, grade).partitions.size());
    RowSpan span(std::move(rows), dim);
    std::lock_guard<std::mutex> lock(span_mutex);
    return cache.emplace(key, std::move(span)).first->second;
}

}  // namespace permuto
