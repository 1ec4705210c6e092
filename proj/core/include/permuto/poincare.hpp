#pragma once

#include <string>
#include <vector>

#include "permuto/rational.hpp"

namespace permuto {

// Polynomial in q with exact integer coefficients. The Poincare polynomials
// computed here have nonnegative palindromic coefficient rows (the Eulerian
// numbers).
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coefficients);

    static QPolynomial constant(BigInt c) { return QPolynomial({std::move(c)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    BigInt coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt evaluate(const BigInt& q) const;
    bool palindromic() const;

    // e.g. "q^3+11q^2+11q+1"
    std::string to_string() const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;  // coeffs_[i] = coefficient of q^i, trimmed
};

// n-th polynomial from the exponential generating function
// 1 + sum p_n(q) y^n / n! = (q-1) / (q - e^((q-1)y)),
// expanded with exact rational series arithmetic. Throws if a non-integer
// coefficient survives (which would signal a series bug).
QPolynomial poincare_gf(int n);

// The same polynomial as the stratification point count: sum over
// compositions (s_1..s_l) of n of the multinomial coefficient times
// (q-1)^(n-l).
QPolynomial poincare_strata(int n);

// Coefficient of q^i in poincare_strata(n); 0 out of range.
BigInt eulerian(int n, int i);

BigInt factorial(int n);

struct PoincareCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct PoincareReport {
    int n_max = 0;
    int ring_n_max = 0;
    std::vector<PoincareCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Cross-checks the two series methods against each other for n <= n_max and
// against the exact ring ranks for n <= ring_n_max (0 skips the ring
// method), plus palindromicity, p_n(1) = n!, p_n(0) = 1 and the rank of the
// degree-one piece 2^n - n - 1.
PoincareReport poincare_cross_check(int n_max, int ring_n_max);

}  // namespace permuto
