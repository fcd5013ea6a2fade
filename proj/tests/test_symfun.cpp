#include <doctest.h>

#include <random>

#include "cobord/symfun.hpp"
#include "cobord/weyl.hpp"

using namespace cobord;

namespace {

PolySpace xspace(int n, int cap, RingPtr ring = Ring::additive())
{
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i)
        v.push_back("x" + std::to_string(i));
    return {std::move(ring), VarSet::make(v), cap};
}

} // namespace

TEST_CASE("complete and elementary symmetric polynomials")
{
    const PolySpace sp = xspace(2, 6);
    CHECK(complete_h(sp, {0, 1}, 2).to_string() == "x1^2 + x1*x2 + x2^2");
    CHECK(complete_h(sp, {0, 1}, -3).is_zero());
    CHECK(complete_h(sp, {0, 1}, 0) == sp.one());
    CHECK(elementary_e(sp, {0, 1}, 2).to_string() == "x1*x2");
    CHECK(elementary_e(sp, {0, 1}, 3).is_zero());
}

TEST_CASE("Schur polynomials, both routes")
{
    const PolySpace sp = xspace(2, 8);
    CHECK(schur_jt(sp, {1}, 2).to_string() == "x1 + x2");
    CHECK(schur_jt(sp, {2, 1}, 2).to_string() == "x1^2*x2 + x1*x2^2");
    CHECK(schur_jt(sp, {}, 2) == sp.one());
    CHECK(schur_jt(sp, {2, 1}, 2) == schur_bialternant(sp, {2, 1}, 2));
    // straightening: the determinant defines non-partition indices
    CHECK(schur_jt(sp, {1, 3}, 2) == -schur_jt(sp, {2, 2}, 2));
    CHECK(schur_jt(sp, {0, 2}, 2) == -schur_jt(sp, {1, 1}, 2));
}

TEST_CASE("alternants divide exactly by the Vandermonde for random shapes")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> part(0, 3);
    const PolySpace sp = xspace(3, 9);
    for (int rep = 0; rep < 6; ++rep) {
        IndexVec lam{part(rng), part(rng)};
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        CHECK_NOTHROW((void)schur_bialternant(sp, lam, 3));
        CHECK(schur_bialternant(sp, lam, 3) == schur_jt(sp, lam, 3));
    }
}

TEST_CASE("Grothendieck polynomials via set-valued tableaux")
{
    const PolySpace sp = xspace(2, 6, Ring::multiplicative());
    CHECK(grothendieck_svt(sp, {}, 2) == sp.one());
    CHECK(grothendieck_svt(sp, {1}, 2).to_string() == "x1 + x2 - beta*x1*x2");
    const PolySpace sp1 = xspace(1, 6, Ring::multiplicative());
    CHECK(grothendieck_svt(sp1, {1}, 1) == sp1.var(0));
    // weakly increasing rows, strictly increasing columns
    CHECK(grothendieck_svt(sp, {1, 1}, 2).to_string() == "x1*x2");
}

TEST_CASE("quadratic Schur determinant")
{
    const PolySpace sp{Ring::additive(), VarSet::make({"y1", "y2"}), 8};
    CHECK(quadratic_schur_det(sp, {3}, 2).is_zero()); // odd part
    CHECK(quadratic_schur_det(sp, {2}, 2).to_string() == "y1^2 + y2^2");
    const PolySpace sp1{Ring::additive(), VarSet::make({"y1"}), 4};
    CHECK(quadratic_schur_det(sp1, {2}, 1) == sp1.var(0) * sp1.var(0));
    // 2J collapses to s_J in the squares
    std::vector<Poly> squares{sp.var(0) * sp.var(0), sp.var(1) * sp.var(1)};
    CHECK(quadratic_schur_det(sp, {4, 2}, 2) == schur_jt(sp, {2, 1}, 2).substituted(squares));
}
