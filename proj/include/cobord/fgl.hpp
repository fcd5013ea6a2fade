#pragma once

#include <memory>
#include <string>

#include "cobord/poly.hpp"

namespace cobord {

// Composition of truncated series: substitute arguments for the variables
// of a one- or two-variable series.  Arguments share one target space and
// the cap of f.
Poly compose1(const Poly& f, const Poly& arg);
Poly compose2(const Poly& f, const Poly& a, const Poly& b);

enum class Theory { additive, multiplicative, hyperbolic, universal };

Theory theory_from_string(const std::string& s);
std::string theory_to_string(Theory t);

// A formal group law F(u,v) over its coefficient ring, together with the
// derived series used everywhere downstream:
//
//   chi(u)       formal inverse, F(u, chi(u)) = 0
//   P(z)         dF/dv(z, 0)
//   1/P(z)       derivative of the logarithm
//   Ptwo(t, y)   (t - y) / (t +_F chi(y)), unit constant term
//   W(u)         u / chi(u), so that 1/chi(s) = W(s)/s
//
// Handles are cheap copies of shared immutable data; one (theory, cap)
// pair is only ever constructed once per process.  `at(cap)` fetches the
// same theory at another precision -- computations elevate explicitly and
// truncate back, caps never mix silently.
class FormalGroupLaw {
public:
    static FormalGroupLaw make(Theory theory, int cap);
    FormalGroupLaw at(int cap) const;

    Theory theory() const;
    int cap() const;
    const RingPtr& ring() const;

    const Poly& sum_series() const;     // vars (u, v)
    const Poly& inverse_series() const; // var (u)
    const Poly& P() const;              // var (z)
    const Poly& Pinv() const;           // var (z)
    const Poly& loginv() const;         // var (u): compositional inverse of log
    const Poly& diff2() const;          // vars (t, y): t +_F chi(y)
    const Poly& ptwo2() const;          // vars (t, y)
    const Poly& chi_cofactor() const;   // var (u)
    const Poly& two1() const;           // var (u): [2](u)
    const Poly& two_z() const;          // vars (t, z): [2](t) +_F z
    const Poly& sum3() const;           // vars (t, y, z): t +_F y +_F z

    // Logarithm l(u) with l(u +_F v) = l(u) + l(v); lives over the ring
    // extended to rational scalars.  Integer-based theories must opt in.
    Poly log(bool allow_rational_extension = false) const;

    Poly formal_sum(const Poly& p, const Poly& q) const;
    Poly formal_inverse(const Poly& p) const;
    Poly n_series(int n, const Poly& p) const;

    Poly ptwo(const Poly& t, const Poly& y) const; // Ptwo evaluated at series

    struct Data; // shared immutable payload (public for the factory)

private:
    explicit FormalGroupLaw(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

// Coefficient images of the Miscenko generators m_k under the ring map
// carrying the universal law onto `target` (m_k goes to the u^{k+1}
// coefficient of the target logarithm).
std::vector<Coeff> specialization_images(const RingPtr& universal_ring, Theory target);

// Apply the specialization map coefficientwise.  Results must be integral
// for integer-based targets; a non-integral value signals an upstream bug
// and throws.
Poly specialize(const Poly& p, Theory target);

} // namespace cobord
