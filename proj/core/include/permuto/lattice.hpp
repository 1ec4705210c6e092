#pragma once

#include <cstdint>
#include <vector>

#include "permuto/label_set.hpp"
#include "permuto/partition.hpp"
#include "permuto/rational.hpp"

namespace permuto {

// Vectors of N_B (x) R = R^B / R, written as functions on B modulo constant
// functions. The canonical representative of a class has value 0 at the
// largest label, so equality is plain componentwise comparison.
template <class T>
class FunctionVector {
public:
    FunctionVector(LabelSet domain, std::vector<T> values)
        : domain_(std::move(domain)), values_(std::move(values)) {
        if (values_.size() != static_cast<std::size_t>(domain_.size()))
            throw std::invalid_argument("FunctionVector: value count != label count");
        const T shift = values_.back();
        if (shift != T(0))
            for (auto& v : values_) v -= shift;
    }

    static FunctionVector zero(const LabelSet& domain) {
        return FunctionVector(domain, std::vector<T>(static_cast<std::size_t>(domain.size()), T(0)));
    }

    // chi_beta: the class of the 0/1 indicator of beta inside B.
    static FunctionVector indicator(const LabelSet& domain, const Block& beta) {
        std::vector<T> vals(static_cast<std::size_t>(domain.size()), T(0));
        for (int x : beta) {
            const int pos = domain.position(x);
            if (pos < 0) throw std::invalid_argument("indicator: label not in domain");
            vals[static_cast<std::size_t>(pos)] = T(1);
        }
        return FunctionVector(std::move(domain), std::move(vals));
    }

    const LabelSet& domain() const { return domain_; }
    const std::vector<T>& values() const { return values_; }
    T value(int label) const {
        const int pos = domain_.position(label);
        if (pos < 0) throw std::invalid_argument("FunctionVector::value: label not in domain");
        return values_[static_cast<std::size_t>(pos)];
    }

    bool is_zero() const {
        for (const auto& v : values_)
            if (v != T(0)) return false;
        return true;
    }

    FunctionVector& operator+=(const FunctionVector& o) {
        check_domain(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
        return *this;
    }
    FunctionVector& operator-=(const FunctionVector& o) {
        check_domain(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
        return *this;
    }
    FunctionVector& operator*=(const T& s) {
        for (auto& v : values_) v *= s;
        return *this;
    }
    friend FunctionVector operator+(FunctionVector a, const FunctionVector& b) { return a += b; }
    friend FunctionVector operator-(FunctionVector a, const FunctionVector& b) { return a -= b; }
    friend FunctionVector operator*(const T& s, FunctionVector a) { return a *= s; }
    friend FunctionVector operator-(FunctionVector a) {
        for (auto& v : a.values_) v = -v;
        return a;
    }

    friend bool operator==(const FunctionVector&, const FunctionVector&) = default;

private:
    void check_domain(const FunctionVector& o) const {
        if (domain_ != o.domain_) throw std::invalid_argument("FunctionVector: domain mismatch");
    }

    LabelSet domain_;
    std::vector<T> values_;  // canonical: last entry 0
};

using LatticeVector = FunctionVector<std::int64_t>;
using RationalVector = FunctionVector<Rat>;

inline RationalVector to_rational(const LatticeVector& v) {
    std::vector<Rat> vals;
    vals.reserve(v.values().size());
    for (auto x : v.values()) vals.emplace_back(x);
    return RationalVector(v.domain(), std::move(vals));
}

}  // namespace permuto
