#include <doctest.h>

#include "cobord/gysin.hpp"
#include "cobord/symfun.hpp"

using namespace cobord;

namespace {

Poly mono(const PolySpace& sp, const IndexVec& e)
{
    Expo ee(static_cast<size_t>(sp.vars->count()), 0);
    for (size_t i = 0; i < e.size(); ++i)
        ee[i] = e[i];
    return Poly::monomial(sp.ring, sp.vars, sp.cap, ee, Coeff::one(sp.ring));
}

std::vector<int> firstv(int n)
{
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        v.push_back(i);
    return v;
}

} // namespace

TEST_CASE("projective pushforward")
{
    const auto f = FormalGroupLaw::make(Theory::additive, 8);
    const PolySpace f1{f.ring(), VarSet::make({"t"}), 8};
    for (int n = 1; n <= 3; ++n) {
        const ChernRoots ctx = ChernRoots::plain(f, n);
        CHECK(pushforward_projective(ctx, mono(f1, {n - 1})) ==
              ctx.space().one().rebased(f.ring()));
        for (int N = 0; N <= 6; ++N)
            CHECK(pushforward_projective(ctx, mono(f1, {N})) ==
                  complete_h(ctx.space(), firstv(n), N - n + 1));
    }
}

TEST_CASE("quadric pushforward")
{
    const auto f = FormalGroupLaw::make(Theory::additive, 6);
    for (int N : {4, 5}) {
        const ChernRoots ctx = ChernRoots::orthogonal(f, N, false); // z = 0
        const PolySpace f1{f.ring(), VarSet::make({"t"}), 6};
        std::vector<int> all = firstv(ctx.space().vars->count());
        for (int k = N - 3; k <= N + 1; ++k) {
            const Poly got = pushforward_quadric(ctx, mono(f1, {k}));
            // [2](t) = 2t in cohomology: the polynomial part has t-degree
            // k+1, so the class is 2 h_{k-N+2} of the doubled root set
            Poly expect = ctx.space().zero();
            const int idx = k - N + 2;
            if (idx >= 0) {
                // h of the doubled roots {y_i, -y_i, (y_{n+1})}
                const auto roots =
                    ctx.root_series({f.ring(), ctx.space().vars, 6}, f.at(6));
                std::vector<Poly> rp(roots.begin(), roots.end());
                // fold complete symmetric functions of the root series
                std::vector<Poly> H(static_cast<size_t>(idx) + 1, ctx.space().zero());
                H[0] = ctx.space().one();
                for (const auto& r : rp) {
                    std::vector<Poly> next(H.size(), ctx.space().zero());
                    for (size_t m = 0; m < H.size(); ++m) {
                        Poly pw = ctx.space().one();
                        for (size_t kk = 0; m + kk < H.size(); ++kk) {
                            next[m + kk] = next[m + kk] + H[m] * pw;
                            pw = pw * r;
                        }
                    }
                    H = std::move(next);
                }
                expect = H[static_cast<size_t>(idx)].scaled(Rat(2));
            }
            CHECK(got == expect.rebased(got.ring()));
        }
    }
}

TEST_CASE("flag pushforwards and guards")
{
    const auto f = FormalGroupLaw::make(Theory::universal, 4);
    const ChernRoots ctx = ChernRoots::plain(f, 2);
    const FlagSpec full{FlagSpec::Type::A, 2, {1, 2}, false};
    const PolySpace fs{f.ring(), ctx.space().vars, 4};

    // complete flag of y^rho gives the empty universal Schur class
    CHECK(dp_pushforward({FlagSpec::Type::A, 2, {1}, false}, ctx, mono(fs, {1})) ==
          universal_schur(ctx, {}));

    // q = 1 agrees with the projective pushforward
    const PolySpace f1{f.ring(), VarSet::make({"y1"}), 4};
    CHECK(dp_pushforward({FlagSpec::Type::A, 2, {1}, false}, ctx, mono(f1, {3})) ==
          pushforward_projective(ctx, mono(f1, {3})));

    // block symmetry is enforced
    const FlagSpec grassmann{FlagSpec::Type::A, 3, {2}, false};
    const ChernRoots ctx3 = ChernRoots::plain(f, 3);
    const PolySpace f2{f.ring(), VarSet::make({"y1", "y2"}), 4};
    CHECK_THROWS_WITH_AS(
        (void)dp_pushforward(grassmann, ctx3, mono(f2, {2, 0})),
        doctest::Contains("symmetric"), error);

    // cap exhaustion is reported rather than silently truncated
    const PolySpace fbig{f.ring(), VarSet::make({"y1"}), 16};
    CHECK_THROWS_WITH_AS(
        (void)dp_pushforward({FlagSpec::Type::A, 2, {1}, false}, ctx, mono(fbig, {16})),
        doctest::Contains("cap exhausted"), error);

    FlagSpec bad{FlagSpec::Type::A, 2, {2, 1}, false};
    CHECK_THROWS_AS(bad.validate(), error);
    (void)full;
}

TEST_CASE("symmetrizing-operator forms")
{
    const auto f = FormalGroupLaw::make(Theory::universal, 4);
    const ChernRoots ctx = ChernRoots::plain(f, 2);
    const PolySpace f1{f.ring(), VarSet::make({"y1"}), 4};
    const FlagSpec spec{FlagSpec::Type::A, 2, {1}, false};
    for (int N = 0; N <= 3; ++N)
        CHECK(symmetrizer_gysin(spec, ctx, mono(f1, {N})) ==
              dp_pushforward(spec, ctx, mono(f1, {N})));

    // the type-C full-flag symmetrizer is the quadratic Schur definition
    const ChernRoots cctx = ChernRoots::symplectic(f, 2, false);
    const FlagSpec cfull{FlagSpec::Type::C, 4, {1, 2}, false};
    const PolySpace fs{f.ring(), cctx.space().vars, 8};
    const IndexVec lam{1, 1};
    IndexVec expo;
    for (int i = 1; i <= 2; ++i)
        expo.push_back(lam[static_cast<size_t>(i - 1)] + 4 - 2 * i + 1);
    CHECK(symmetrizer_gysin(cfull, cctx, mono(fs, expo)) ==
          quadratic_universal_schur(cctx, lam));

    CHECK_THROWS_AS((void)symmetrizer_gysin({FlagSpec::Type::BD, 4, {1}, false},
                                            ChernRoots::orthogonal(f, 4, false), mono(f1, {1})),
                    error);
}

TEST_CASE("isotropic Grassmann pushforward of universal Schur classes")
{
    const auto f = FormalGroupLaw::make(Theory::universal, 4);
    const ChernRoots ctx = ChernRoots::symplectic(f, 2, false);
    auto [lhs, rhs] = pragacz_ratajski(ctx, {3, 2}, 2);
    CHECK(lhs == rhs.rebased(lhs.ring()));
    CHECK_THROWS_WITH_AS((void)pragacz_ratajski(ctx, {3, 1}, 2),
                         doctest::Contains("index condition"), error);

    const auto fa = FormalGroupLaw::make(Theory::additive, 6);
    const ChernRoots actx = ChernRoots::symplectic(fa, 2, false);
    // I - rho with an odd entry pushes to zero
    auto [l0, r0] = pragacz_ratajski(actx, {5, 2}, 2); // I - rho = (3, 1)
    CHECK(l0.is_zero());
    CHECK(r0.is_zero());
}
