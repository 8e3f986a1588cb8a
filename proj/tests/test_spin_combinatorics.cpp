#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinpic/spin_combinatorics.hpp"

using namespace spinpic;

TEST_CASE("node orders at separating nodes")
{
    NodeOrder o1 = node_order_separating(1, 3);
    CHECK(o1.u == 1);
    CHECK(o1.v == 2);

    NodeOrder o2 = node_order_separating(3, 5); // 2*3-1 = 5 = 0 mod 5
    CHECK(o2.ramond());

    NodeOrder o3 = node_order_separating(2, 2);
    CHECK(o3.u == 1);
    CHECK(o3.v == 1);

    CHECK_THROWS_AS(node_order_separating(1, 1), usage_error);
    CHECK_THROWS_AS(node_order_separating(0, 4), usage_error);
}

TEST_CASE("node orders are always valid")
{
    for (long r = 2; r <= 30; ++r)
        for (long i = 1; i <= 40; ++i) {
            NodeOrder o = node_order_separating(i, r);
            CHECK(o.valid());
            CHECK((o.ramond() || o.u + o.v == r));
        }
}

TEST_CASE("sector classification")
{
    CHECK(classify_sector({0, 0, 6}).tag == SectorTag::ramond);
    CHECK(classify_sector({0, 0, 6}).ell == 6);
    CHECK(classify_sector({1, 5, 6}).tag == SectorTag::neveu_schwarz);
    CHECK(classify_sector({2, 4, 6}).tag == SectorTag::semi_ramond);
    CHECK(classify_sector({2, 4, 6}).ell == 2);
    CHECK_THROWS_AS(classify_sector({3, 5, 6}), usage_error);
}

TEST_CASE("gcd levels")
{
    CHECK(c_level(2, 3) == 3);
    CHECK(d_level(0, 6) == 6);
    CHECK(d_level(2, 8) == 2);
    CHECK(c_level(3, 5) == 5); // 2*3-1 = 5
}

TEST_CASE("ell invariant and component counts")
{
    CHECK(ell_invariant(3, 2, {}) == 2);
    CHECK(ell_invariant(1, 6, {{0}}) == 6);
    CHECK(ell_invariant(2, 3, {}) == 0); // 3 does not divide 2-2g = -2
    CHECK(ell_invariant(0, 3, {{1}}) == 1);
    CHECK(ell_invariant(0, 3, {{0}}) == 0);
    CHECK(ell_invariant(1, 6, {{2}}) == 0); // 6 does not divide 2

    CHECK(component_count(3, 2, {}) == 2);
    CHECK(component_count(1, 12, {{0}}) == 6);
    CHECK(component_count(2, 3, {}) == 0);

    for (long r = 2; r <= 12; ++r)
        for (long g = 2; g <= 12; ++g) {
            long ell = ell_invariant(g, r, {});
            long d = component_count(g, r, {});
            if (ell == 0) CHECK(d == 0);
            if (ell == 1) CHECK(d == 1);
        }
}

TEST_CASE("spin structure counts")
{
    CHECK(spin_structure_count(2, 2) == 16);
    CHECK(spin_structure_count(1, 5) == 25);
    CHECK(spin_structure_count(2, 3) == 0);
    // exactness at a size where double arithmetic would round
    CHECK(spin_structure_count(21, 8) == pow_int(Int(8), 42));
}

TEST_CASE("genus-1 isomorphism class count")
{
    CHECK(genus1_iso_class_count(3) == 5);
    CHECK(genus1_iso_class_count(5) == 13);
    CHECK(genus1_iso_class_count(7) == 25);
    CHECK_THROWS_AS(genus1_iso_class_count(4), usage_error);
}

TEST_CASE("node ramification")
{
    CHECK(node_ramification({1, 1, 2}) == 2);
    CHECK(node_ramification({0, 0, 6}) == 1);
    CHECK(node_ramification({2, 4, 6}) == 3);
}

TEST_CASE("boundary inventory")
{
    auto find = [](const std::vector<BoundaryLabel>& labels, BoundaryKind k, long idx) {
        for (const BoundaryLabel& lab : labels)
            if (lab.kind == k && lab.index == idx) return lab;
        throw std::runtime_error("label not found");
    };

    auto inv52 = boundary_inventory(5, 2);
    CHECK(find(inv52, BoundaryKind::alpha, 2).components_above == 4);

    auto inv53 = boundary_inventory(5, 3);
    CHECK(find(inv53, BoundaryKind::alpha, 2).components_above == 1);

    auto inv34 = boundary_inventory(3, 4);
    CHECK(find(inv34, BoundaryKind::gamma, 2).gluing_count == Int(2));
    CHECK(find(inv34, BoundaryKind::gamma, 0).gluing_count == Int(4));

    // odd level: one component over every separating divisor whose two
    // sides both have genus at least 2 (the genus-1 side of alpha_1
    // splits into its own index components)
    for (long r = 3; r <= 11; r += 2)
        for (const BoundaryLabel& lab : boundary_inventory(8, r))
            if (lab.kind == BoundaryKind::alpha && lab.index >= 2)
                CHECK(lab.components_above == 1);

    for (long g = 2; g <= 8; ++g)
        for (long r = 2; r <= 10; ++r)
            for (const BoundaryLabel& lab : boundary_inventory(g, r)) {
                if (lab.kind == BoundaryKind::gamma && lab.index == 0)
                    CHECK(lab.ramification == 1);
                if (lab.kind == BoundaryKind::alpha) {
                    CHECK((lab.ramification == 1) == (mod_residue(2 * lab.index - 1, r) == 0));
                    CHECK(lab.ramification == node_ramification(lab.order));
                }
            }

    // gluing-class range at j = r/2 brackets the halved gluing count
    auto inv48 = boundary_inventory(4, 8);
    auto g4 = find(inv48, BoundaryKind::gamma, 4);
    REQUIRE(g4.gluing_classes_mod_swap.has_value());
    CHECK(g4.gluing_classes_mod_swap->first == 1);  // ell = 4, two fixed gluings
    CHECK(g4.gluing_classes_mod_swap->second == 3);

    CHECK_THROWS_AS(boundary_inventory(1, 4), usage_error);
}

TEST_CASE("pullback coefficients")
{
    CHECK(pullback_coeff_alpha(1, 2, 4) == 2);
    CHECK(pullback_coeff_alpha(1, 4, 4) == 1);

    auto t1 = pullback_targets_gamma(1, 2, 8);
    REQUIRE(t1.size() == 2);
    CHECK(t1[0] == std::pair<long, Int>{1, 4});
    CHECK(t1[1] == std::pair<long, Int>{3, 4});

    auto t2 = pullback_targets_gamma(0, 2, 4);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0] == std::pair<long, Int>{0, 1});
    CHECK(t2[1] == std::pair<long, Int>{2, 2});

    CHECK_THROWS_AS(pullback_targets_gamma(3, 4, 8), usage_error);
    CHECK_THROWS_AS(pullback_targets_gamma(1, 3, 8), usage_error);
}

TEST_CASE("pullback coefficient integrality sweep")
{
    for (long r = 2; r <= 30; ++r)
        for (long s = 1; s <= r; ++s) {
            if (r % s != 0) continue;
            for (long i = 1; i <= 30; ++i) CHECK(pullback_coeff_alpha(i, s, r) > 0);
            for (long j = 0; 2 * j <= s; ++j)
                for (const auto& [k, c] : pullback_targets_gamma(j, s, r)) {
                    (void)k;
                    CHECK(c > 0);
                }
        }
}

TEST_CASE("marking vectors reduce mod r")
{
    MarkingVector m{{-1, 7, 0}};
    CHECK(m.reduced(5).m == std::vector<long>{4, 2, 0});
    CHECK(m.m == std::vector<long>{-1, 7, 0}); // stored as given
}
