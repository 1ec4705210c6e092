#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "permuto/label_set.hpp"
#include "permuto/partition.hpp"
#include "permuto/rational.hpp"
#include "permuto/relations.hpp"

namespace permuto {

// Exact-rational linear combination of symbols indexed by ordered set
// partitions of one label set. The Tag only distinguishes the cohomology
// side (good monomials m(tau)) from the homology side (generators mu(tau));
// the containers behave identically.
template <class Tag>
class FormalSum {
public:
    explicit FormalSum(LabelSet B) : B_(std::move(B)) {}

    static FormalSum zero(const LabelSet& B) { return FormalSum(B); }

    static FormalSum generator(const OrderedSetPartition& tau, Rat coeff = Rat(1)) {
        FormalSum e(tau.label_set());
        e.add(tau, coeff);
        return e;
    }

    // m(epsilon) resp. mu(epsilon): the class of the trivial 1-partition.
    static FormalSum unit(const LabelSet& B) {
        return generator(OrderedSetPartition::single(B));
    }

    const LabelSet& label_set() const { return B_; }
    const std::map<OrderedSetPartition, Rat>& terms() const { return terms_; }
    bool is_structurally_zero() const { return terms_.empty(); }

    void add(const OrderedSetPartition& tau, const Rat& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(tau, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Grade when homogeneous (all terms of equal length), nullopt otherwise
    // or when structurally zero.
    std::optional<int> grade() const {
        std::optional<int> g;
        for (const auto& [tau, c] : terms_) {
            const int k = tau.length() - 1;
            if (!g)
                g = k;
            else if (*g != k)
                return std::nullopt;
        }
        return g;
    }

    FormalSum& operator+=(const FormalSum& o) {
        check(o);
        for (const auto& [tau, c] : o.terms_) add(tau, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        check(o);
        for (const auto& [tau, c] : o.terms_) add(tau, -c);
        return *this;
    }
    FormalSum& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [tau, c] : terms_) c *= s;
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const Rat& s, FormalSum a) { return a *= s; }
    friend FormalSum operator-(FormalSum a) {
        for (auto& [tau, c] : a.terms_) c = -c;
        return a;
    }

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    std::string to_string(const char* symbol) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [tau, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << rat_to_string(c) << "*";
            os << symbol << tau.to_string();
        }
        return os.str();
    }

private:
    void check(const FormalSum& o) const {
        if (B_ != o.B_) throw std::invalid_argument("FormalSum: label set mismatch");
    }

    LabelSet B_;
    std::map<OrderedSetPartition, Rat> terms_;
};

// Grade components as coordinate vectors in the grade bases.
template <class Tag>
std::map<int, std::vector<Rat>> coordinates_by_grade(const FormalSum<Tag>& e) {
    std::map<int, std::vector<Rat>> out;
    for (const auto& [tau, c] : e.terms()) {
        const int grade = tau.length() - 1;
        const GradeBasis& basis = grade_basis(e.label_set(), grade);
        auto [it, inserted] = out.emplace(grade, std::vector<Rat>());
        if (inserted) it->second.assign(basis.partitions.size(), Rat(0));
        it->second[static_cast<std::size_t>(basis.index.at(tau))] = c;
    }
    return out;
}

// Vanishing modulo the linear relations: every grade component lies in the
// cached relation span of its grade.
template <class Tag>
bool in_relation_span(const FormalSum<Tag>& e) {
    for (auto& [grade, coords] : coordinates_by_grade(e))
        if (!relation_span(e.label_set(), grade).contains(std::move(coords))) return false;
    return true;
}

}  // namespace permuto
