#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinpic/divisor_algebra.hpp"
#include "spinpic/render.hpp"
#include "spinpic/spin_combinatorics.hpp"

using namespace spinpic;

namespace {

const BasisContext g5r2 = BasisContext::finite(5, 2);

DivisorClass cls(const BasisContext& ctx, std::initializer_list<std::pair<GeneratorId, long>> terms)
{
    DivisorClass c(ctx);
    for (const auto& [g, v] : terms) c.add_term(g, Int(v));
    return c;
}

} // namespace

TEST_CASE("contexts and generator validity")
{
    CHECK_THROWS_AS(BasisContext::finite(1, 4), usage_error);
    CHECK_THROWS_AS(BasisContext::generic(1), usage_error);

    BasisContext ctx = BasisContext::finite(7, 6);
    CHECK(ctx.valid_generator(alpha_id(3)));
    CHECK(!ctx.valid_generator(alpha_id(4)));
    CHECK(!ctx.valid_generator(alpha_residue_id(1)));
    CHECK(ctx.valid_generator(gamma_id(3)));
    CHECK(!ctx.valid_generator(gamma_id(4)));
    CHECK(ctx.valid_generator(mu_id(3)));
    CHECK(!ctx.valid_generator(mu_id(4)));
    CHECK(!ctx.valid_generator(mu_id(1))); // mu(1) is lambda, never stored

    BasisContext gen = BasisContext::generic(6);
    CHECK(gen.valid_generator(alpha_residue_id(5)));
    CHECK(!gen.valid_generator(alpha_residue_id(6)));
    CHECK(!gen.valid_generator(alpha_id(1)));
    CHECK_THROWS_AS(gen.genus(), usage_error);
}

TEST_CASE("mu(1) folds into lambda")
{
    CHECK(DivisorClass::mu(g5r2, 1) == DivisorClass::lambda(g5r2));
}

TEST_CASE("combine")
{
    DivisorClass l = DivisorClass::lambda(g5r2);
    CHECK(combine(l, l, 1, -1).is_zero());

    DivisorClass c1 = combine(DivisorClass::gamma(g5r2, 0), DivisorClass::alpha(g5r2, 1), 2, 3);
    CHECK(c1 == cls(g5r2, {{gamma_id(0), 2}, {alpha_id(1), 3}}));

    DivisorClass two_l_g0 = cls(g5r2, {{lambda_id(), 2}, {gamma_id(0), 1}});
    CHECK(combine(two_l_g0, DivisorClass::gamma(g5r2, 0), 1, -1) ==
          cls(g5r2, {{lambda_id(), 2}}));

    CHECK_THROWS_AS(combine(l, DivisorClass::lambda(BasisContext::generic(2)), 1, 1), usage_error);
}

TEST_CASE("delta expansions")
{
    CHECK(expand_delta_0(g5r2) == cls(g5r2, {{gamma_id(0), 1}, {gamma_id(1), 2}}));

    BasisContext r4 = BasisContext::finite(4, 4);
    CHECK(expand_delta_0(r4) ==
          cls(r4, {{gamma_id(0), 1}, {gamma_id(1), 4}, {gamma_id(2), 2}}));

    BasisContext r5 = BasisContext::finite(6, 5);
    CHECK(expand_delta_i(r5, 3) == cls(r5, {{alpha_id(3), 1}})); // 2*3-1 = 5, Ramond
    CHECK(expand_delta_i(r5, 1) == cls(r5, {{alpha_id(1), 5}}));
    CHECK_THROWS_AS(expand_delta_i(r5, 4), usage_error);

    CHECK(expand_delta(g5r2) ==
          cls(g5r2, {{gamma_id(0), 1},
                     {gamma_id(1), 2},
                     {alpha_id(1), 2},
                     {alpha_id(2), 2}}));
}

TEST_CASE("pairing expansions")
{
    CHECK(expand_pairing(g5r2, 2) ==
          cls(g5r2, {{alpha_id(1), 1}, {alpha_id(2), 1}, {gamma_id(1), 1}}));

    BasisContext r4 = BasisContext::finite(5, 4);
    CHECK(expand_pairing(r4, 4) ==
          cls(r4, {{alpha_id(1), 3}, {alpha_id(2), 3}, {gamma_id(1), 3}, {gamma_id(2), 2}}));
    CHECK(expand_pairing(r4, 1).is_zero());
    CHECK_THROWS_AS(expand_pairing(r4, 3), usage_error);

    for (long r = 2; r <= 12; ++r) {
        BasisContext ctx = BasisContext::generic(r);
        DivisorClass p = expand_pairing(ctx, r);
        CHECK(p.coefficient(gamma_id(0)) == 0);
        for (long j = 1; 2 * j <= r; ++j)
            CHECK(p.coefficient(gamma_id(j)) == Int(j) * (r - j) / d_level(j, r));
    }
}

TEST_CASE("sigma expansions")
{
    BasisContext r3 = BasisContext::finite(6, 3);
    CHECK(expand_sigma(r3, 3, 2L) == cls(r3, {{alpha_id(2), 1}}));

    // non-integral index gives zero
    BasisContext r4 = BasisContext::generic(4);
    CHECK(expand_sigma(r4, 4, Rat(5, 2)).is_zero());

    BasisContext r6g7 = BasisContext::finite(7, 6);
    CHECK(expand_sigma(r6g7, 2, 1L) == cls(r6g7, {{alpha_id(1), 3}, {alpha_id(3), 3}}));
}

TEST_CASE("pullback of classes")
{
    BasisContext r4 = BasisContext::finite(5, 4);
    BasisContext r2 = BasisContext::finite(5, 2);

    CHECK(pullback_class(r4, DivisorClass::lambda(r2)) == DivisorClass::lambda(r4));
    CHECK(pullback_class(r4, DivisorClass::mu(r2, 2)) == DivisorClass::mu(r4, 2));
    CHECK(pullback_class(r4, DivisorClass::gamma(r2, 0)) ==
          cls(r4, {{gamma_id(0), 1}, {gamma_id(2), 2}}));
    CHECK(pullback_class(r4, DivisorClass::alpha(r2, 1)) == cls(r4, {{alpha_id(1), 2}}));

    CHECK_THROWS_AS(pullback_class(BasisContext::finite(5, 6), DivisorClass::lambda(r4)),
                    usage_error);
    CHECK_THROWS_AS(pullback_class(BasisContext::generic(4), DivisorClass::lambda(r2)),
                    usage_error);
}

TEST_CASE("specialize")
{
    BasisContext g3 = BasisContext::generic(3);
    CHECK(specialize(DivisorClass::alpha_residue(g3, 1), 9) ==
          cls(BasisContext::finite(9, 3), {{alpha_id(1), 1}, {alpha_id(4), 1}}));

    BasisContext g5 = BasisContext::generic(5);
    CHECK(specialize(DivisorClass::alpha_residue(g5, 2), 4) ==
          cls(BasisContext::finite(4, 5), {{alpha_id(2), 1}}));

    BasisContext g4 = BasisContext::generic(4);
    CHECK(specialize(DivisorClass::alpha_residue(g4, 0), 6).is_zero());

    CHECK_THROWS_AS(specialize(DivisorClass::lambda(g5r2), 5), usage_error);
}

TEST_CASE("generic and finite expansions cohere")
{
    for (long r = 2; r <= 12; ++r) {
        BasisContext gen = BasisContext::generic(r);
        for (long g = 2; g <= 40; ++g) {
            BasisContext fin = BasisContext::finite(g, r);
            CHECK(specialize(expand_delta(gen), g) == expand_delta(fin));
            CHECK(specialize(expand_delta_0(gen), g) == expand_delta_0(fin));
            for (long s = 1; s <= r; ++s) {
                if (r % s != 0) continue;
                CHECK(specialize(expand_pairing(gen, s), g) == expand_pairing(fin, s));
                CHECK(specialize(expand_sigma(gen, s, 2L), g) == expand_sigma(fin, s, 2L));
            }
        }
    }
}

TEST_CASE("pullback functoriality on boundary generators")
{
    for (long r = 2; r <= 12; ++r)
        for (long s = 2; s <= r; ++s) {
            if (r % s != 0) continue;
            for (long t = 2; t <= s; ++t) {
                if (s % t != 0) continue;
                BasisContext cr = BasisContext::generic(r);
                BasisContext cs = BasisContext::generic(s);
                BasisContext ct = BasisContext::generic(t);
                for (long j = 0; 2 * j <= t; ++j) {
                    DivisorClass x = DivisorClass::gamma(ct, j);
                    CHECK(pullback_class(cr, pullback_class(cs, x)) == pullback_class(cr, x));
                }
                for (long k = 0; k < t; ++k) {
                    DivisorClass x = DivisorClass::alpha_residue(ct, k);
                    CHECK(pullback_class(cr, pullback_class(cs, x)) == pullback_class(cr, x));
                }
            }
        }
}

TEST_CASE("delta expansions are pullback compatible")
{
    for (long r = 2; r <= 20; ++r)
        for (long s = 2; s <= r; ++s) {
            if (r % s != 0) continue;
            BasisContext cr = BasisContext::generic(r);
            BasisContext cs = BasisContext::generic(s);
            CHECK(pullback_class(cr, expand_delta(cs)) == expand_delta(cr));
            CHECK(pullback_class(cr, expand_delta_0(cs)) == expand_delta_0(cr));
        }
}

TEST_CASE("serialization round-trips")
{
    DivisorClass c = cls(g5r2, {{lambda_id(), -4}, {mu_id(2), 8}, {gamma_id(0), 1}});
    CHECK(class_from_json(class_to_json(c)) == c);

    DivisorClass big(g5r2);
    big.add_term(lambda_id(), pow_int(Int(10), 30) + 7); // beyond 64-bit
    CHECK(class_from_json(class_to_json(big)) == big);

    BasisContext gen = BasisContext::generic(6);
    DivisorClass d = expand_pairing(gen, 3);
    CHECK(class_from_json(class_to_json(d)) == d);
}
