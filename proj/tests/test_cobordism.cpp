#include <doctest.h>

#include "cobord/cobordism.hpp"
#include "cobord/symfun.hpp"

using namespace cobord;

namespace {

std::vector<int> firstv(int n)
{
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        v.push_back(i);
    return v;
}

} // namespace

TEST_CASE("universal Schur functions specialize to the classical families")
{
    const auto fu = FormalGroupLaw::make(Theory::universal, 5);
    const ChernRoots ctx = ChernRoots::plain(fu, 2, "x");
    const PolySpace spa{Ring::additive(), ctx.space().vars, 5};
    CHECK(specialize(universal_schur(ctx, {2, 1}), Theory::additive) == schur_jt(spa, {2, 1}, 2));
    const PolySpace spm{Ring::multiplicative(), ctx.space().vars, 5};
    CHECK(specialize(universal_schur(ctx, {1}), Theory::multiplicative) ==
          grothendieck_svt(spm, {1}, 2));
    // the empty-shape value starts 1 + a_{1,2} x1 x2
    const Poly s0 = universal_schur(ctx, {});
    const Coeff* a12 = fu.sum_series().coeff_at({1, 2});
    REQUIRE(a12);
    REQUIRE(s0.coeff_at({1, 1}));
    CHECK(*s0.coeff_at({1, 1}) == a12->rebased(s0.ring()));
    CHECK(s0.is_graded_homogeneous(0));
    CHECK_THROWS_AS((void)universal_schur(ctx, {1, 1, 1}), error); // too long
}

TEST_CASE("Segre tables across the theories")
{
    SUBCASE("additive")
    {
        const auto f = FormalGroupLaw::make(Theory::additive, 6);
        const ChernRoots ctx = ChernRoots::plain(f, 3);
        const SegreTable t = segre_table(ctx, -2, 4);
        for (int m = -2; m <= 4; ++m) {
            const Poly expect = m < 0 ? ctx.space().zero() : complete_h(ctx.space(), firstv(3), m);
            CHECK(t.at(m) == expect.rebased(t.at(m).ring()));
        }
        CHECK_THROWS_AS((void)t.at(9), error); // outside the window
    }
    SUBCASE("multiplicative")
    {
        const auto f = FormalGroupLaw::make(Theory::multiplicative, 6);
        const ChernRoots ctx = ChernRoots::plain(f, 2);
        const Coeff beta = Coeff::generator(f.ring(), 0);
        const SegreTable t = segre_table(ctx, -3, 2);
        for (int a = 0; a <= 3; ++a)
            CHECK(t.at(-a) == Poly::constant(f.ring(), ctx.space().vars, 6,
                                             beta.pow(static_cast<unsigned>(a))));
        CHECK(t.at(2) == grothendieck_svt({f.ring(), ctx.space().vars, 6}, {2}, 2));
    }
    SUBCASE("universal constant term")
    {
        const auto f = FormalGroupLaw::make(Theory::universal, 4);
        const ChernRoots ctx = ChernRoots::plain(f, 2);
        const SegreTable t = segre_table(ctx, 0, 1);
        CHECK(t.at(0).constant_term() == Coeff::one(t.at(0).ring()));
        CHECK(t.at(0).is_graded_homogeneous(0));
        CHECK(t.at(1).is_graded_homogeneous(1));
    }
}

TEST_CASE("relative Segre classes")
{
    const auto f = FormalGroupLaw::make(Theory::additive, 5);
    const ChernRoots one = ChernRoots::plain(f, 1, "x");
    const SegreTable t = segre_relative(one, {}, 0, 5);
    for (int m = 0; m <= 5; ++m) {
        Expo e{m};
        CHECK(t.at(m) == Poly::monomial(t.at(m).ring(), one.space().vars, 5, e,
                                        Coeff::one(t.at(m).ring())));
    }
}

TEST_CASE("one-row functions agree across their two routes")
{
    const auto f = FormalGroupLaw::make(Theory::hyperbolic, 5);
    const ChernRoots ctx = ChernRoots::plain(f, 2);
    for (int m = -2; m <= 3; ++m) {
        const Poly v = new_universal_schur(ctx, m); // asserts route agreement
        CHECK(v.is_graded_homogeneous(m));
    }
    const auto fa = FormalGroupLaw::make(Theory::additive, 5);
    const ChernRoots actx = ChernRoots::plain(fa, 3);
    CHECK(new_universal_schur(actx, 2) ==
          complete_h(actx.space(), firstv(3), 2).rebased(new_universal_schur(actx, 2).ring()));
}

TEST_CASE("quadratic functions")
{
    const auto fa = FormalGroupLaw::make(Theory::additive, 6);
    const ChernRoots ctx = ChernRoots::symplectic(fa, 2, false);
    const PolySpace sp = ctx.space();

    CHECK(quadratic_universal_schur(ctx, {1}).is_zero());
    CHECK(quadratic_universal_schur(ctx, {2}) ==
          quadratic_schur_det(sp, {2}, 2).rebased(quadratic_universal_schur(ctx, {2}).ring()));
    CHECK(quadratic_via_gf(ctx, {}) == sp.one().rebased(quadratic_via_gf(ctx, {}).ring()));
    CHECK(quadratic_via_gf(ctx, {2, 2}) ==
          quadratic_universal_schur(ctx, {2, 2})
              .rebased(quadratic_via_gf(ctx, {2, 2}).ring()));

    const auto fm = FormalGroupLaw::make(Theory::multiplicative, 6);
    const ChernRoots mctx = ChernRoots::symplectic(fm, 2, false);
    // q = 1 determinant is the single Segre entry
    const SegreTable g = segre_table(mctx, 2, 2);
    CHECK(k_quadratic_det(mctx, {2}) == g.at(2).rebased(k_quadratic_det(mctx, {2}).ring()));
    // beta = 0 reduces the determinant to the classical one
    const RingPtr ar = Ring::additive();
    CHECK(k_quadratic_det(mctx, {2, 2}).mapped_coeffs(ar, {Coeff::zero(ar)}) ==
          quadratic_schur_det({ar, sp.vars, 6}, {2, 2}, 2));

    CHECK_THROWS_AS((void)quadratic_universal_schur(ChernRoots::symplectic(fa, 2, true), {2}),
                    error); // twist must be zero
    CHECK_THROWS_AS((void)k_quadratic_det(ChernRoots::symplectic(fa, 2, false), {2}),
                    error); // K route needs the multiplicative law
}
