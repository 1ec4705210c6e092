#include "permuto/poincare.hpp"

#include <sstream>
#include <stdexcept>

#include "permuto/label_set.hpp"
#include "permuto/ring.hpp"

namespace permuto {

namespace {

// Dense polynomial in q over the rationals; only used inside the series
// expansion.
using QRatPoly = std::vector<Rat>;

QRatPoly trim(QRatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QRatPoly add(const QRatPoly& a, const QRatPoly& b) {
    QRatPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trim(std::move(out));
}

QRatPoly mul(const QRatPoly& a, const QRatPoly& b) {
    if (a.empty() || b.empty()) return {};
    QRatPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return trim(std::move(out));
}

QRatPoly scale(QRatPoly p, const Rat& s) {
    for (auto& c : p) c *= s;
    return trim(std::move(p));
}

// Truncated power series in y with polynomial-in-q coefficients.
using YSeries = std::vector<QRatPoly>;  // index = power of y

// Multiplicative inverse of a series with constant term 1.
YSeries invert_unit_series(const YSeries& s, int order) {
    YSeries inv(static_cast<std::size_t>(order) + 1);
    inv[0] = {Rat(1)};
    for (int k = 1; k <= order; ++k) {
        QRatPoly acc;
        for (int i = 1; i <= k; ++i) {
            if (static_cast<std::size_t>(i) >= s.size()) break;
            acc = add(acc, mul(s[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(k - i)]));
        }
        inv[static_cast<std::size_t>(k)] = scale(std::move(acc), Rat(-1));
    }
    return inv;
}

std::vector<BigInt> binomial_row(int n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k)
        row[static_cast<std::size_t>(k)] =
            row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    return row;
}

// (q-1)^m with integer coefficients.
std::vector<BigInt> q_minus_one_power(int m) {
    const auto binom = binomial_row(m);
    std::vector<BigInt> out(static_cast<std::size_t>(m) + 1);
    for (int t = 0; t <= m; ++t) {
        BigInt c = binom[static_cast<std::size_t>(t)];
        if ((m - t) % 2 == 1) c = -c;
        out[static_cast<std::size_t>(t)] = c;
    }
    return out;
}

}  // namespace

QPolynomial::QPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + coeffs_[i];
    return acc;
}

bool QPolynomial::palindromic() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
    return true;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        first = false;
        const BigInt a = abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i >= 1) os << "q";
        if (i >= 2) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

QPolynomial poincare_gf(int n) {
    if (n < 1) throw std::invalid_argument("poincare_gf: n must be >= 1");
    // q - e^((q-1)y) = (q-1) * (1 - sum_{k>=1} (q-1)^(k-1) y^k / k!), so the
    // right hand side of the generating identity is the inverse of the unit
    // series in parentheses.
    YSeries unit(static_cast<std::size_t>(n) + 1);
    unit[0] = {Rat(1)};
    Rat kfact(1);
    QRatPoly q_minus_1_pow{Rat(1)};  // (q-1)^(k-1), starting at k=1
    const QRatPoly q_minus_1{Rat(-1), Rat(1)};
    for (int k = 1; k <= n; ++k) {
        kfact *= k;
        unit[static_cast<std::size_t>(k)] = scale(q_minus_1_pow, Rat(-1) / kfact);
        q_minus_1_pow = mul(q_minus_1_pow, q_minus_1);
    }
    const YSeries series = invert_unit_series(unit, n);
    QRatPoly coeff = series[static_cast<std::size_t>(n)];
    // p_n = n! * [y^n]; must come out integral
    Rat nf(1);
    for (int k = 2; k <= n; ++k) nf *= k;
    std::vector<BigInt> out;
    out.reserve(coeff.size());
    for (auto& c : coeff) {
        const Rat v = c * nf;
        if (denominator(v) != 1)
            throw std::runtime_error("poincare_gf: non-integer coefficient (series bug)");
        out.push_back(numerator(v));
    }
    return QPolynomial(std::move(out));
}

QPolynomial poincare_strata(int n) {
    if (n < 1) throw std::invalid_argument("poincare_strata: n must be >= 1");
    // Iterate compositions of n as bitmasks of gap positions.
    std::vector<BigInt> acc(static_cast<std::size_t>(n), BigInt(0));
    std::vector<BigInt> fact(static_cast<std::size_t>(n) + 1);
    fact[0] = 1;
    for (int k = 1; k <= n; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;
    const unsigned gaps = static_cast<unsigned>(n - 1);
    for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
        // parts of the composition
        std::vector<int> parts;
        int run = 1;
        for (unsigned g = 0; g < gaps; ++g) {
            if (mask & (1u << g)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        BigInt multinomial = fact[static_cast<std::size_t>(n)];
        for (int p : parts) multinomial /= fact[static_cast<std::size_t>(p)];
        const int l = static_cast<int>(parts.size());
        const auto pw = q_minus_one_power(n - l);
        for (std::size_t t = 0; t < pw.size(); ++t) acc[t] += multinomial * pw[t];
    }
    return QPolynomial(std::move(acc));
}

BigInt eulerian(int n, int i) {
    if (n < 1 || i < 0 || i > n - 1) return 0;
    return poincare_strata(n).coeff(i);
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

PoincareReport poincare_cross_check(int n_max, int ring_n_max) {
    PoincareReport report;
    report.n_max = n_max;
    report.ring_n_max = ring_n_max;
    for (int n = 1; n <= n_max; ++n) {
        const QPolynomial gf = poincare_gf(n);
        const QPolynomial strata = poincare_strata(n);
        PoincareCheck methods{"gf == strata, n=" + std::to_string(n), gf == strata, ""};
        if (!methods.passed)
            methods.detail = gf.to_string() + " vs " + strata.to_string();
        report.checks.push_back(std::move(methods));

        PoincareCheck degree{"degree == n-1, n=" + std::to_string(n),
                             strata.degree() == n - 1, strata.to_string()};
        report.checks.push_back(std::move(degree));

        PoincareCheck euler{"p(1) == n!, n=" + std::to_string(n),
                            strata.evaluate(1) == factorial(n), ""};
        report.checks.push_back(std::move(euler));

        PoincareCheck unital{"p(0) == 1, n=" + std::to_string(n), strata.coeff(0) == 1, ""};
        report.checks.push_back(std::move(unital));

        PoincareCheck palin{"palindromic, n=" + std::to_string(n), strata.palindromic(), ""};
        report.checks.push_back(std::move(palin));

        const BigInt h2 = BigInt(BigInt(1) << n) - n - 1;
        PoincareCheck rank2{"coeff of q == 2^n-n-1, n=" + std::to_string(n),
                            n == 1 ? strata.coeff(1) == 0 : strata.coeff(1) == h2, ""};
        report.checks.push_back(std::move(rank2));

        if (n <= ring_n_max) {
            const auto dims = graded_dimensions(LabelSet::segment(n));
            bool same = static_cast<int>(dims.size()) == n;
            for (int k = 0; same && k < n; ++k)
                if (BigInt(dims[static_cast<std::size_t>(k)]) != strata.coeff(k)) same = false;
            PoincareCheck ring{"ring ranks match, n=" + std::to_string(n), same, ""};
            if (!same) {
                std::ostringstream os;
                os << "ring dims [";
                for (std::size_t k = 0; k < dims.size(); ++k) os << (k ? "," : "") << dims[k];
                os << "] vs " << strata.to_string();
                ring.detail = os.str();
            }
            report.checks.push_back(std::move(ring));
        }
    }
    return report;
}

}  // namespace permuto
