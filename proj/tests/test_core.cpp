#include <doctest.h>

#include "cobord/json_io.hpp"
#include "cobord/parser.hpp"
#include "cobord/poly.hpp"

using namespace cobord;

namespace {

PolySpace space2(RingPtr ring, int cap)
{
    return {std::move(ring), VarSet::make({"x1", "x2"}), cap};
}

} // namespace

TEST_CASE("ring construction and guards")
{
    CHECK_THROWS_AS(Ring::make({Base::integers, {{"a", -1}, {"a", -2}}}), error);
    auto r = Ring::universal(4);
    CHECK(r->generator_count() == 4);
    CHECK(r->generators()[2].grade == -3);
    CHECK(r->is_universal_family());
    CHECK(Ring::multiplicative()->generator_index("beta") == 0);
    CHECK_FALSE(Ring::multiplicative()->prefix_compatible(*Ring::hyperbolic()));
}

TEST_CASE("coefficient arithmetic and grading")
{
    auto r = Ring::multiplicative();
    const Coeff beta = Coeff::generator(r, 0);
    CHECK(beta * beta == Coeff::generator(r, 0, 2));
    CHECK(Coeff(r, 1) + beta + Coeff(r, -1) == beta);
    CHECK_THROWS_AS(checked_add(Coeff::one(Ring::additive()), Coeff::one(r)), error);

    auto u = Ring::universal(2);
    const Coeff m1 = Coeff::generator(u, 0), m2 = Coeff::generator(u, 1);
    const Coeff mixed = m1.scaled(Rat(2)) + m2.scaled(Rat(6));
    auto parts = mixed.grade_decomposition();
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(-1) == m1.scaled(Rat(2)));
    CHECK(parts.at(-2) == m2.scaled(Rat(6)));
    CHECK((m1 * m2).is_homogeneous_of_grade(-3));
}

TEST_CASE("polynomial arithmetic respects the cap")
{
    const PolySpace sp = space2(Ring::additive(), 2);
    const Poly x1 = sp.var(0), x2 = sp.var(1);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

    const PolySpace sp1 = space2(Ring::additive(), 1);
    const Poly y1 = sp1.var(0);
    const Poly one = sp1.one();
    CHECK((one + y1) * (one + y1) == one + y1.scaled(Rat(2))); // x1^2 dropped

    CHECK_THROWS_AS((void)(x1 + sp1.var(0)), error); // cap mismatch
}

TEST_CASE("series inversion and exact division")
{
    const PolySpace sp = space2(Ring::multiplicative(), 5);
    const Coeff beta = Coeff::generator(sp.ring, 0);
    const Poly one = sp.one();
    const Poly p = one - sp.var(0).scaled(beta);
    Poly inv = p.inverted();
    CHECK(p * inv == one);
    // 1/(1 - beta x) = sum beta^k x^k
    Poly expect = sp.zero();
    for (int k = 0; k <= 5; ++k)
        expect = expect + Poly::monomial(sp.ring, sp.vars, 5, {k, 0},
                                         beta.pow(static_cast<unsigned>(k)));
    CHECK(inv == expect);
    CHECK_THROWS_AS((void)sp.var(0).inverted(), error); // no unit constant term

    const Poly x1 = sp.var(0), x2 = sp.var(1);
    CHECK((x1 * x1 - x2 * x2).divided_exact(x1 - x2, 5) == x1 + x2);
    CHECK((x1 * x2 * x2 - x1 * x1 * x2).divided_exact(x2 - x1, 5) == x1 * x2);
}

TEST_CASE("substitution composes series")
{
    const PolySpace sp = space2(Ring::additive(), 4);
    const Poly x1 = sp.var(0), x2 = sp.var(1);
    // (x1 + x2)(x1 -> x, x2 -> -x) = 0
    CHECK((x1 + x2).substituted({x1, -x1}).is_zero());
    // substituting a unit-constant series into a saturated slot is refused
    Poly series = sp.one();
    for (int k = 1; k <= 4; ++k)
        series = series + Poly::monomial(sp.ring, sp.vars, 4, {k, 0}, Coeff::one(sp.ring));
    CHECK_THROWS_AS((void)series.substituted({sp.one() + x1, x2}), error);
}

TEST_CASE("expression parser follows the grammar")
{
    const PolySpace sp{Ring::additive(), VarSet::make({"y1", "y2"}), 6};
    const Poly p = parse_poly("y1^3*y2 + 2*y2^2", sp);
    CHECK(p == Poly::monomial(sp.ring, sp.vars, 6, {3, 1}, Coeff::one(sp.ring)) +
                   Poly::monomial(sp.ring, sp.vars, 6, {0, 2}, Coeff(sp.ring, 2)));
    CHECK(parse_poly("(y1 + y2)^2 - y1^2 - y2^2", sp) ==
          Poly::monomial(sp.ring, sp.vars, 6, {1, 1}, Coeff(sp.ring, 2)));
    CHECK_THROWS_WITH_AS(parse_poly("y1^(2)", sp), doctest::Contains("exponent"), error);
    CHECK_THROWS_WITH_AS(parse_poly("y5", sp), doctest::Contains("unknown variable"), error);
    CHECK_THROWS_WITH_AS(parse_poly("y1 + ", sp), doctest::Contains("byte 5"), error);
    CHECK_THROWS_WITH_AS(parse_poly("y1^12345678901", sp), doctest::Contains("overflow"), error);
}

TEST_CASE("JSON rendering round-trips bit-identically")
{
    const PolySpace sp = space2(Ring::universal(3), 3);
    const Coeff m1 = Coeff::generator(sp.ring, 0);
    const Poly p = sp.one() +
                   Poly::monomial(sp.ring, sp.vars, 3, {1, 1},
                                  m1.scaled(Rat(-4)) + Coeff::generator(sp.ring, 1)) +
                   sp.var(0).scaled(Rat(7, 3));
    const std::string first = poly_to_json(p);
    const Poly back = poly_from_json(first);
    CHECK(back == p.rebased(back.ring()));
    CHECK(poly_to_json(back) == first);
}
