#include <doctest.h>

#include "cobord/fgl.hpp"

using namespace cobord;

namespace {

Poly u_of(const FormalGroupLaw& f)
{
    return Poly::variable(f.ring(), f.inverse_series().vars(), f.cap(), 0);
}

} // namespace

TEST_CASE("the four laws take their closed forms")
{
    const auto fm = FormalGroupLaw::make(Theory::multiplicative, 4);
    CHECK(fm.sum_series().to_string() == "u + v - beta*u*v");
    CHECK(fm.inverse_series().to_string() == "-u - beta*u^2 - beta^2*u^3 - beta^3*u^4");
    CHECK(fm.P().to_string() == "1 - beta*z");

    const auto fa = FormalGroupLaw::make(Theory::additive, 4);
    CHECK(fa.sum_series().to_string() == "u + v");
    CHECK(fa.inverse_series().to_string() == "-u");

    const auto fh = FormalGroupLaw::make(Theory::hyperbolic, 4);
    CHECK(fh.sum_series().to_string() == "u + v + b*u*v + c*u^2*v + c*u*v^2 + b*c*u^2*v^2");
    CHECK(fh.inverse_series().to_string() == "-u + b*u^2 - b^2*u^3 + b^3*u^4");

    const auto fu = FormalGroupLaw::make(Theory::universal, 3);
    CHECK(fu.sum_series().to_string() ==
          "u + v - 2*m1*u*v + (4*m1^2 - 3*m2)*u^2*v + (4*m1^2 - 3*m2)*u*v^2");

    CHECK_THROWS_AS(FormalGroupLaw::make(Theory::additive, 0), error);
    CHECK_THROWS_AS(theory_from_string("elliptic"), error);
}

TEST_CASE("law axioms and inverses")
{
    for (Theory th : {Theory::additive, Theory::multiplicative, Theory::hyperbolic,
                      Theory::universal}) {
        const auto f = FormalGroupLaw::make(th, 5);
        const Poly u = u_of(f);
        CHECK(f.formal_sum(u, f.formal_inverse(u)).is_zero());
        // commutativity through compose: F(u,v) - F(v,u) = 0 on a two-var space
        const PolySpace sp{f.ring(), VarSet::make({"a", "b"}), 5};
        CHECK(f.formal_sum(sp.var(0), sp.var(1)) == f.formal_sum(sp.var(1), sp.var(0)));
    }
}

TEST_CASE("n-series")
{
    const auto fm = FormalGroupLaw::make(Theory::multiplicative, 4);
    const Poly u = u_of(fm);
    CHECK(fm.n_series(0, u).is_zero());
    CHECK(fm.n_series(2, u).to_string() == "2*u - beta*u^2");
    // [-n] = [n] o chi
    CHECK(fm.n_series(-2, u) == fm.n_series(2, fm.formal_inverse(u)));

    const auto fa = FormalGroupLaw::make(Theory::additive, 4);
    CHECK(fa.n_series(7, u_of(fa)) == u_of(fa).scaled(Rat(7)));
}

TEST_CASE("logarithm and compositional contracts")
{
    const auto fm = FormalGroupLaw::make(Theory::multiplicative, 4);
    CHECK_THROWS_AS((void)fm.log(), error); // integer base needs the opt-in
    CHECK(fm.log(true).to_string() == "u + 1/2*beta*u^2 + 1/3*beta^2*u^3 + 1/4*beta^3*u^4");

    const auto fu = FormalGroupLaw::make(Theory::universal, 5);
    const Poly l = fu.log();
    const Poly linv = fu.loginv();
    CHECK(compose1(l, linv) == u_of(fu)); // l(l^{-1}(s)) = s
    // l' = 1/P
    const Poly one = Poly::constant(fu.ring(), fu.P().vars(), 5, Rat(1));
    CHECK(fu.P() * fu.Pinv() == one);
}

TEST_CASE("Ptwo and the chi cofactor")
{
    for (Theory th : {Theory::multiplicative, Theory::universal}) {
        const auto f = FormalGroupLaw::make(th, 5);
        const PolySpace ty{f.ring(), f.ptwo2().vars(), 5};
        CHECK(f.ptwo2() * f.diff2() == ty.var(0) - ty.var(1));
        CHECK(f.ptwo2().constant_term() == Coeff::one(f.ring()));
        // 1/chi(s) = W(s)/s, so W(u) chi(u) = u
        CHECK(f.chi_cofactor() * f.inverse_series() == u_of(f));
    }
    CHECK(FormalGroupLaw::make(Theory::multiplicative, 4).ptwo2().to_string() == "1 - beta*y");
}

TEST_CASE("specialization of the universal law")
{
    const auto fu = FormalGroupLaw::make(Theory::universal, 5);
    for (Theory th : {Theory::additive, Theory::multiplicative, Theory::hyperbolic}) {
        const auto ft = FormalGroupLaw::make(th, 5);
        CHECK(specialize(fu.sum_series(), th) == ft.sum_series());
        CHECK(specialize(fu.inverse_series(), th) == ft.inverse_series());
    }
    // [CP^k] goes to beta^k in K-theory
    const auto images = specialization_images(Ring::universal(4), Theory::multiplicative);
    const Coeff beta = Coeff::generator(images[0].ring(), images[0].ring()->generator_index("beta"));
    for (int k = 1; k <= 4; ++k)
        CHECK(images[static_cast<size_t>(k - 1)].scaled(Rat(k + 1)) ==
              beta.pow(static_cast<unsigned>(k)).rebased(images[0].ring()));
}
