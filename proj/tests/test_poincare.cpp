#include <doctest.h>

#include <map>

#include "permuto/partition.hpp"
#include "permuto/poincare.hpp"

using namespace permuto;

namespace {

// Classical triangle recurrence, the independent oracle for the coefficient
// rows: A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
BigInt eulerian_recurrence(int n, int k) {
    if (n == 1) return k == 0 ? 1 : 0;
    if (k < 0 || k > n - 1) return 0;
    return BigInt(k + 1) * eulerian_recurrence(n - 1, k) +
           BigInt(n - k) * eulerian_recurrence(n - 1, k - 1);
}

}  // namespace

TEST_CASE("QPolynomial basics") {
    const QPolynomial p({1, 11, 11, 1});
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "q^3+11q^2+11q+1");
    CHECK(p.evaluate(1) == 24);
    CHECK(p.palindromic());
    CHECK_FALSE(QPolynomial({1, 2}).palindromic());
    CHECK(QPolynomial({0, 0}).degree() == -1);  // trimmed to zero
    CHECK(QPolynomial({-1, 1}).to_string() == "q-1");
}

TEST_CASE("poincare_gf: pinned small values") {
    CHECK(poincare_gf(1).to_string() == "1");
    CHECK(poincare_gf(2).to_string() == "q+1");
    CHECK(poincare_gf(3).to_string() == "q^2+4q+1");
    CHECK(poincare_gf(4).to_string() == "q^3+11q^2+11q+1");
    CHECK(poincare_gf(5).to_string() == "q^4+26q^3+66q^2+26q+1");
    CHECK_THROWS_AS(poincare_gf(0), std::invalid_argument);
}

TEST_CASE("poincare_strata: pinned small values and Euler characteristic") {
    CHECK(poincare_strata(2).to_string() == "q+1");
    CHECK(poincare_strata(4).to_string() == "q^3+11q^2+11q+1");
    for (int n = 1; n <= 8; ++n) CHECK(poincare_strata(n).evaluate(1) == factorial(n));
}

TEST_CASE("the two methods agree exactly for n <= 8") {
    for (int n = 1; n <= 8; ++n) CHECK(poincare_gf(n) == poincare_strata(n));
}

TEST_CASE("n = 6 row is the Eulerian row") {
    // both methods give the degree-5 palindromic row 1,57,302,302,57,1
    const auto p6 = poincare_gf(6);
    CHECK(p6 == poincare_strata(6));
    CHECK(p6.degree() == 5);
    CHECK(p6.to_string() == "q^5+57q^4+302q^3+302q^2+57q+1");
}

TEST_CASE("eulerian") {
    CHECK(eulerian(4, 1) == 11);
    CHECK(eulerian(4, -1) == 0);
    CHECK(eulerian(4, 4) == 0);
    for (int n = 1; n <= 10; ++n) {
        CHECK(eulerian(n, 0) == 1);
        CHECK(eulerian(n, 1) == (n == 1 ? BigInt(0) : BigInt((BigInt(1) << n) - n - 1)));
    }
    SUBCASE("recurrence oracle, n <= 8") {
        for (int n = 1; n <= 8; ++n)
            for (int k = 0; k < n; ++k) CHECK(eulerian(n, k) == eulerian_recurrence(n, k));
    }
    SUBCASE("row symmetry and row sums") {
        for (int n = 1; n <= 8; ++n) {
            BigInt total = 0;
            for (int k = 0; k < n; ++k) {
                CHECK(eulerian(n, k) == eulerian(n, n - 1 - k));
                total += eulerian(n, k);
            }
            CHECK(total == factorial(n));
        }
    }
}

TEST_CASE("stratum counts match the enumeration, n <= 5") {
    // number of (k+1)-block partitions == number of length-(k+1) compositions
    // weighted by multinomials == coefficient structure behind the strata sum
    for (int n = 1; n <= 5; ++n) {
        std::map<int, int> by_length;
        for (const auto& tau : enumerate_partitions(LabelSet::segment(n))) ++by_length[tau.length()];
        // evaluate the strata polynomial block count combinatorially: sum over
        // compositions of n of given length l of n!/(s_1!...s_l!)
        std::vector<BigInt> fact(static_cast<std::size_t>(n) + 1);
        fact[0] = 1;
        for (int k = 1; k <= n; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;
        std::map<int, BigInt> weighted;
        const unsigned gaps = static_cast<unsigned>(n - 1);
        for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
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
            weighted[static_cast<int>(parts.size())] += multinomial;
        }
        for (const auto& [len, count] : by_length) CHECK(BigInt(count) == weighted[len]);
    }
}

TEST_CASE("cross check report") {
    const auto rep = poincare_cross_check(6, 3);
    CHECK(rep.ok());
    const auto bad = poincare_cross_check(8, 0);  // skip ring
    CHECK(bad.ok());
}
