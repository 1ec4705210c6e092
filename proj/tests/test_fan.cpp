#include <doctest.h>

#include <random>
#include <set>

#include "permuto/fan.hpp"

using namespace permuto;

namespace {

OrderedSetPartition osp(std::vector<Block> blocks) { return OrderedSetPartition(std::move(blocks)); }

RationalVector rational_vec(const LabelSet& B, std::vector<int> vals) {
    std::vector<Rat> r(vals.begin(), vals.end());
    return RationalVector(B, std::move(r));
}

RationalVector random_vector(const LabelSet& B, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-1000, 1000);
    std::vector<Rat> vals;
    for (int i = 0; i < B.size(); ++i) vals.emplace_back(d(rng));
    return RationalVector(B, std::move(vals));
}

}  // namespace

TEST_CASE("lattice vector canonicalization") {
    const LabelSet B({1, 2, 3});
    CHECK(LatticeVector(B, {1, 1, 1}).is_zero());
    CHECK(LatticeVector(B, {5, 2, 3}) == LatticeVector(B, {2, -1, 0}));
    CHECK(LatticeVector::indicator(B, {1, 3}) == LatticeVector(B, {0, -1, 0}));
    CHECK(LatticeVector::indicator(B, {1}).values() == std::vector<std::int64_t>{1, 0, 0});
}

TEST_CASE("cone_of") {
    const LabelSet B({1, 2, 3});
    CHECK(cone_of(osp({{1, 2, 3}})).generators.empty());

    const auto ray = cone_of(osp({{1}, {2, 3}}));
    REQUIRE(ray.generators.size() == 1);
    CHECK(ray.generators[0] == LatticeVector(B, {1, 0, 0}));

    const auto max = cone_of(osp({{1}, {2}, {3}}));
    REQUIRE(max.generators.size() == 2);
    CHECK(max.generators[0] == LatticeVector(B, {1, 0, 0}));
    CHECK(max.generators[1] == LatticeVector(B, {1, 1, 0}));
}

TEST_CASE("locate") {
    const LabelSet B({1, 2, 3});
    CHECK(locate(rational_vec(B, {0, 0, 0})) == osp({{1, 2, 3}}));
    CHECK(locate(rational_vec(B, {5, 5, 0})) == osp({{1, 2}, {3}}));
    CHECK(locate(rational_vec(B, {3, 1, 0})) == osp({{1}, {2}, {3}}));
    CHECK(locate(rational_vec(B, {-1, 0, 2})) == osp({{3}, {2}, {1}}));
}

TEST_CASE("membership") {
    const LabelSet B({1, 2, 3});
    const auto tau = osp({{1}, {2, 3}});
    SUBCASE("sum of generators is interior") {
        for (const auto& t : enumerate_partitions(B)) {
            const auto cone = cone_of(t);
            LatticeVector sum = LatticeVector::zero(B);
            for (const auto& g : cone.generators) sum += g;
            CHECK(membership(to_rational(sum), t) == Membership::interior);
        }
    }
    SUBCASE("negated generator is outside (strong convexity)") {
        CHECK(membership(to_rational(-LatticeVector::indicator(B, {1})), tau) ==
              Membership::outside);
    }
    SUBCASE("zero is boundary of positive cones, interior of the zero cone") {
        CHECK(membership(rational_vec(B, {0, 0, 0}), tau) == Membership::boundary);
        CHECK(membership(rational_vec(B, {0, 0, 0}), osp({{1, 2, 3}})) == Membership::interior);
        CHECK(membership(rational_vec(B, {1, 0, 0}), osp({{1, 2, 3}})) == Membership::outside);
    }
    SUBCASE("locate gives interior membership on random rational vectors") {
        for (int n = 2; n <= 5; ++n) {
            const LabelSet Bn = LabelSet::segment(n);
            std::mt19937_64 rng(42);
            for (int t = 0; t < 200; ++t) {
                const auto chi = random_vector(Bn, rng);
                CHECK(membership(chi, locate(chi)) == Membership::interior);
            }
        }
    }
}

TEST_CASE("strong convexity on generator sums, |B| <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const LabelSet B = LabelSet::segment(n);
        for (const auto& tau : enumerate_partitions(B)) {
            if (tau.length() == 1) continue;
            LatticeVector sum = LatticeVector::zero(B);
            for (const auto& g : cone_of(tau).generators) sum += g;
            CHECK(membership(to_rational(-sum), tau) == Membership::outside);
        }
    }
}

TEST_CASE("is_face and codimension-one faces") {
    CHECK(is_face(osp({{1, 2, 3}}), osp({{1}, {2}, {3}})));
    CHECK(is_face(osp({{1, 2}, {3}}), osp({{1}, {2}, {3}})));
    CHECK_FALSE(is_face(osp({{1}, {2}, {3}}), osp({{1, 2}, {3}})));

    SUBCASE("(l-1)-faces come from merging an adjacent pair") {
        const LabelSet B = LabelSet::segment(4);
        for (const auto& tau : enumerate_partitions(B)) {
            const int l = tau.length() - 1;
            if (l < 1) continue;
            std::set<OrderedSetPartition> expected;
            for (int a = 0; a + 1 < tau.length(); ++a) {
                std::vector<Block> blocks;
                for (int b = 0; b < tau.length(); ++b) {
                    if (b == a) {
                        Block merged = tau.block(a);
                        merged.insert(merged.end(), tau.block(a + 1).begin(),
                                      tau.block(a + 1).end());
                        blocks.push_back(std::move(merged));
                    } else if (b != a + 1) {
                        blocks.push_back(tau.block(b));
                    }
                }
                expected.insert(OrderedSetPartition(std::move(blocks)));
            }
            std::set<OrderedSetPartition> actual;
            for (const auto& face : enumerate_partitions(B))
                if (face.length() == tau.length() - 1 && is_face(face, tau)) actual.insert(face);
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("cone intersection = cone on the common good subfamily") {
    const LabelSet B = LabelSet::segment(3);
    CHECK(intersect_cones(osp({{1}, {2, 3}}), osp({{1, 2}, {3}})) == osp({{1, 2, 3}}));
    CHECK(intersect_cones(osp({{1}, {2}, {3}}), osp({{1}, {3}, {2}})) == osp({{1}, {2, 3}}));

    SUBCASE("membership characterization on random points, |B| = 4") {
        const LabelSet B4 = LabelSet::segment(4);
        const auto all = enumerate_partitions(B4);
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int t = 0; t < 400; ++t) {
            const auto& t1 = all[pick(rng)];
            const auto& t2 = all[pick(rng)];
            const auto meet = intersect_cones(t1, t2);
            const auto chi = random_vector(B4, rng);
            const bool in1 = membership(chi, t1) != Membership::outside;
            const bool in2 = membership(chi, t2) != Membership::outside;
            const bool inm = membership(chi, meet) != Membership::outside;
            CHECK((in1 && in2) == inm);
        }
    }
}

TEST_CASE("smoothness") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& tau : enumerate_partitions(LabelSet::segment(n))) CHECK(check_smooth(tau));

    SUBCASE("doubled generator is caught") {
        const LabelSet B = LabelSet::segment(3);
        auto cone = cone_of(osp({{1}, {2}, {3}}));
        std::vector<LatticeVector> gens = cone.generators;
        gens[0] = LatticeVector(B, {2, 0, 0});  // 2 * chi_{1}
        CHECK_FALSE(unimodular(gens));
    }
    SUBCASE("dependent generators are caught") {
        const LabelSet B = LabelSet::segment(3);
        std::vector<LatticeVector> gens{LatticeVector(B, {1, 0, 0}), LatticeVector(B, {2, 0, 0})};
        CHECK_FALSE(unimodular(gens));
    }
}

TEST_CASE("check_complete") {
    const auto rep = check_complete(LabelSet::segment(3), 500, 2024);
    CHECK(rep.ok());
    CHECK(rep.maximal_cones_total == 6);
    CHECK(rep.maximal_cones_hit <= 6);
    CHECK(rep.maximal_cones_hit >= 5);  // 500 generic samples hit nearly all orderings

    const auto rep4 = check_complete(LabelSet::segment(4), 200, 7);
    CHECK(rep4.ok());
    CHECK(rep4.maximal_cones_total == 24);
}

TEST_CASE("forgetful maps") {
    const LabelSet B4 = LabelSet::segment(4);
    const LabelSet B3 = LabelSet::segment(3);
    CHECK(forgetful_vector_map(B3, LatticeVector::indicator(B4, {1, 4})) ==
          LatticeVector::indicator(B3, {1}));
    CHECK(forgetful_vector_map(B4, LatticeVector::indicator(B4, {1, 4})) ==
          LatticeVector::indicator(B4, {1, 4}));

    CHECK(forgetful_partition_map(osp({{1, 4}, {2}, {3}}), B3) ==
          osp({{1}, {2}, {3}}));
    CHECK(forgetful_partition_map(osp({{4}, {1, 2, 3}}), B3) ==
          osp({{1, 2, 3}}));
    CHECK_THROWS_AS(forgetful_partition_map(osp({{1, 2}}), B3),
                    std::invalid_argument);

    SUBCASE("restriction commutes with refinement, |B| <= 4") {
        const auto all = enumerate_partitions(B4);
        for (const auto& a : all)
            for (const auto& b : all)
                if (refines(a, b))
                    CHECK(refines(forgetful_partition_map(a, B3), forgetful_partition_map(b, B3)));
    }
}

TEST_CASE("section maps") {
    const LabelSet B2({1, 2});
    const LabelSet B3 = LabelSet::segment(3);
    // s_1 extends chi_{1} on {1,2} by value at 1; the class equals chi_{1,3}
    CHECK(section_vector_map(1, B3, LatticeVector::indicator(B2, {1})) ==
          LatticeVector::indicator(B3, {1, 3}));
    CHECK_THROWS_AS(section_vector_map(5, B3, LatticeVector::indicator(B2, {1})),
                    std::invalid_argument);

    SUBCASE("section then forgetful is the identity") {
        std::mt19937_64 rng(5);
        for (int n = 2; n <= 4; ++n) {
            const LabelSet Bs = LabelSet::segment(n);
            const LabelSet Bb = LabelSet::segment(n + 1);
            std::uniform_int_distribution<std::int64_t> d(-50, 50);
            for (int t = 0; t < 100; ++t) {
                std::vector<std::int64_t> vals;
                for (int i = 0; i < n; ++i) vals.push_back(d(rng));
                const LatticeVector chi(Bs, std::move(vals));
                for (int j = 1; j <= n; ++j)
                    CHECK(forgetful_vector_map(Bs, section_vector_map(j, Bb, chi)) == chi);
            }
        }
    }
}

TEST_CASE("fiber strata") {
    const auto strata = fiber_strata(osp({{1}}), 2);
    REQUIRE(strata.size() == 3);
    int components = 0, nodes = 0;
    std::set<OrderedSetPartition> seen;
    for (const auto& [p, kind] : strata) {
        seen.insert(p);
        (kind == FiberKind::component ? components : nodes) += 1;
    }
    CHECK(components == 1);
    CHECK(nodes == 2);
    CHECK(seen == std::set<OrderedSetPartition>{osp({{1, 2}}),
                                                osp({{2}, {1}}),
                                                osp({{1}, {2}})});

    SUBCASE("counts and projection, |B| <= 4") {
        for (int n = 1; n <= 4; ++n) {
            const LabelSet B = LabelSet::segment(n);
            for (const auto& tau : enumerate_partitions(B)) {
                const auto s = fiber_strata(tau, n + 1);
                CHECK(static_cast<int>(s.size()) == 2 * tau.length() + 1);
                for (const auto& [big, kind] : s) CHECK(forgetful_partition_map(big, B) == tau);
            }
        }
    }
}
