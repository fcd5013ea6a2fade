#include "cobord/fgl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "cobord/error.hpp"

namespace cobord {

namespace {

Poly constant_like(const Poly& model, const Coeff& c)
{
    return Poly::constant(model.ring(), model.vars(), model.cap(), c);
}

// Horner evaluation of a univariate polynomial/series at a series argument.
Poly horner1(const Poly& f, int var, const Poly& arg)
{
    std::map<int, Poly> parts = f.collect(var);
    Poly acc(arg.ring(), arg.vars(), arg.cap());
    if (parts.empty())
        return acc;
    const int top = parts.rbegin()->first;
    for (int k = top; k >= 0; --k) {
        if (k != top)
            acc = acc * arg;
        auto it = parts.find(k);
        if (it != parts.end()) {
            // it->second is constant in `var`; move it into the target space
            for (const auto& [e, c] : it->second.terms()) {
                bug_check(expo_degree(e) == 0, "argument space mismatch");
                acc = acc + constant_like(acc, c);
            }
        }
    }
    return acc;
}

} // namespace

Poly compose1(const Poly& f, const Poly& arg)
{
    require(f.vars()->count() == 1, "compose1 needs a univariate series");
    require(f.cap() == arg.cap(), "cap mismatch");
    require(f.ring()->same_as(*arg.ring()), "mixed-ring operands");
    return horner1(f, 0, arg);
}

Poly compose2(const Poly& f, const Poly& a, const Poly& b)
{
    require(f.vars()->count() == 2, "compose2 needs a bivariate series");
    require(f.cap() == a.cap() && f.cap() == b.cap(), "cap mismatch");
    require(a.vars()->same_as(*b.vars()), "arguments over different spaces");
    require(f.ring()->same_as(*a.ring()) && f.ring()->same_as(*b.ring()), "mixed-ring operands");
    // Horner in u, inner series in v evaluated at b
    std::map<int, Poly> parts = f.collect(0);
    Poly acc(a.ring(), a.vars(), a.cap());
    if (parts.empty())
        return acc;
    const int top = parts.rbegin()->first;
    for (int k = top; k >= 0; --k) {
        if (k != top)
            acc = acc * a;
        auto it = parts.find(k);
        if (it != parts.end())
            acc = acc + horner1(it->second, 1, b);
    }
    return acc;
}

Theory theory_from_string(const std::string& s)
{
    if (s == "additive")
        return Theory::additive;
    if (s == "multiplicative")
        return Theory::multiplicative;
    if (s == "hyperbolic")
        return Theory::hyperbolic;
    if (s == "universal")
        return Theory::universal;
    throw error("unknown theory tag: " + s);
}

std::string theory_to_string(Theory t)
{
    switch (t) {
    case Theory::additive: return "additive";
    case Theory::multiplicative: return "multiplicative";
    case Theory::hyperbolic: return "hyperbolic";
    case Theory::universal: return "universal";
    }
    throw error("unknown theory tag");
}

struct FormalGroupLaw::Data {
    Theory theory = Theory::additive;
    int cap = 0;
    RingPtr ring;
    Poly Pinv; // over (z)
    Poly log1; // over (u); universal only (exact by construction)

    mutable std::mutex lazy_mutex;
    // lazy for the universal law, eager otherwise
    mutable std::optional<Poly> F;       // over (u, v)
    mutable std::optional<Poly> chi;     // over (u)
    mutable std::optional<Poly> P;       // over (z)
    mutable std::optional<Poly> loginv1; // over (u)
    mutable std::optional<Poly> diff2;
    mutable std::optional<Poly> ptwo2;
    mutable std::optional<Poly> cofactor;
    mutable std::optional<Poly> two1;
    mutable std::optional<Poly> two_z;
    mutable std::optional<Poly> sum3;
};

namespace {

std::shared_ptr<const FormalGroupLaw::Data> build_data(Theory theory, int cap)
{
    require(cap >= 1, "cap must be at least 1");
    auto d = std::make_shared<FormalGroupLaw::Data>();
    d->theory = theory;
    d->cap = cap;

    const VarsPtr uv = VarSet::make({"u", "v"});
    const VarsPtr u1 = VarSet::make({"u"});
    const VarsPtr z1 = VarSet::make({"z"});

    switch (theory) {
    case Theory::additive: {
        d->ring = Ring::additive();
        const Poly u = Poly::variable(d->ring, uv, cap, 0);
        const Poly v = Poly::variable(d->ring, uv, cap, 1);
        d->F = u + v;
        d->P = Poly::constant(d->ring, z1, cap, Rat(1));
        d->Pinv = *d->P;
        break;
    }
    case Theory::multiplicative: {
        d->ring = Ring::multiplicative();
        const Coeff beta = Coeff::generator(d->ring, 0);
        const Poly u = Poly::variable(d->ring, uv, cap, 0);
        const Poly v = Poly::variable(d->ring, uv, cap, 1);
        d->F = u + v - (u * v).scaled(beta);
        const Poly z = Poly::variable(d->ring, z1, cap, 0);
        d->P = Poly::constant(d->ring, z1, cap, Rat(1)) - z.scaled(beta);
        d->Pinv = d->P->inverted();
        break;
    }
    case Theory::hyperbolic: {
        d->ring = Ring::hyperbolic();
        const Coeff b = Coeff::generator(d->ring, 0);
        const Coeff c = Coeff::generator(d->ring, 1);
        const Poly u = Poly::variable(d->ring, uv, cap, 0);
        const Poly v = Poly::variable(d->ring, uv, cap, 1);
        const Poly one = Poly::constant(d->ring, uv, cap, Rat(1));
        d->F = (u + v + (u * v).scaled(b)) * (one - (u * v).scaled(c)).inverted();
        const Poly z = Poly::variable(d->ring, z1, cap, 0);
        d->P = Poly::constant(d->ring, z1, cap, Rat(1)) + z.scaled(b) + (z * z).scaled(c);
        d->Pinv = d->P->inverted();
        break;
    }
    case Theory::universal: {
        d->ring = Ring::universal(cap);
        // the exact logarithm l(u) = u + sum m_k u^{k+1}
        Poly l = Poly::variable(d->ring, u1, cap, 0);
        for (int k = 1; k + 1 <= cap; ++k)
            l = l + Poly::monomial(d->ring, u1, cap, Expo{k + 1},
                                   Coeff::generator(d->ring, k - 1));
        d->log1 = l;
        // 1/P = l'(z) = 1 + sum (k+1) m_k z^k
        Poly pinv = Poly::constant(d->ring, z1, cap, Rat(1));
        for (int k = 1; k <= cap; ++k)
            pinv = pinv + Poly::monomial(d->ring, z1, cap, Expo{k},
                                         Coeff::generator(d->ring, k - 1).scaled(Rat(k + 1)));
        d->Pinv = pinv;
        return d;
    }
    }

    // integer-based theories: formal inverse solved degree by degree from
    // F(u, chi(u)) = 0
    const Poly u = Poly::variable(d->ring, u1, cap, 0);
    Poly chi = -u;
    for (int deg = 2; deg <= cap; ++deg) {
        const Poly r = compose2(*d->F, u, chi);
        chi = chi - r.homogeneous_part(deg);
    }
    bug_check(compose2(*d->F, u, chi).is_zero(), "formal inverse failed");
    d->chi = chi;
    return d;
}

std::shared_ptr<const FormalGroupLaw::Data> cached_data(Theory theory, int cap)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const FormalGroupLaw::Data>> cache;
    const std::pair<int, int> key{static_cast<int>(theory), cap};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    auto data = build_data(theory, cap);
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace(key, std::move(data)).first->second;
}

} // namespace

FormalGroupLaw FormalGroupLaw::make(Theory theory, int cap)
{
    return FormalGroupLaw(cached_data(theory, cap));
}

FormalGroupLaw FormalGroupLaw::at(int cap) const
{
    return cap == d_->cap ? *this : make(d_->theory, cap);
}

Theory FormalGroupLaw::theory() const { return d_->theory; }
int FormalGroupLaw::cap() const { return d_->cap; }
const RingPtr& FormalGroupLaw::ring() const { return d_->ring; }
const Poly& FormalGroupLaw::Pinv() const { return d_->Pinv; }

namespace {

// compositional inverse of the universal logarithm, solved degree by degree
Poly invert_log(const Poly& l)
{
    Poly g = Poly::variable(l.ring(), l.vars(), l.cap(), 0);
    for (int deg = 2; deg <= l.cap(); ++deg) {
        const Poly r = compose1(l, g) - Poly::variable(l.ring(), l.vars(), l.cap(), 0);
        g = g - r.homogeneous_part(deg);
    }
    return g;
}

} // namespace

const Poly& FormalGroupLaw::loginv() const
{
    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->loginv1)
        d_->loginv1 = invert_log(d_->log1);
    return *d_->loginv1;
}

const Poly& FormalGroupLaw::inverse_series() const
{
    {
        std::lock_guard<std::mutex> lock(d_->lazy_mutex);
        if (d_->chi)
            return *d_->chi;
    }
    Poly chi = compose1(loginv(), -d_->log1); // universal only reaches here
    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->chi)
        d_->chi = std::move(chi);
    return *d_->chi;
}

const Poly& FormalGroupLaw::P() const
{
    {
        std::lock_guard<std::mutex> lock(d_->lazy_mutex);
        if (d_->P)
            return *d_->P;
    }
    Poly p = d_->Pinv.inverted(); // universal only reaches here
    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->P)
        d_->P = std::move(p);
    return *d_->P;
}

const Poly& FormalGroupLaw::sum_series() const
{
    std::unique_lock<std::mutex> lock(d_->lazy_mutex);
    if (!d_->F) {
        // universal: F = loginv(l(u) + l(v))
        const VarsPtr uv = VarSet::make({"u", "v"});
        const Poly u = Poly::variable(d_->ring, uv, d_->cap, 0);
        const Poly v = Poly::variable(d_->ring, uv, d_->cap, 1);
        lock.unlock();
        Poly f = compose1(loginv(), compose1(d_->log1, u) + compose1(d_->log1, v));
        lock.lock();
        if (!d_->F)
            d_->F = std::move(f);
    }
    return *d_->F;
}

const Poly& FormalGroupLaw::diff2() const
{
    {
        std::lock_guard<std::mutex> lock(d_->lazy_mutex);
        if (d_->diff2)
            return *d_->diff2;
    }
    Poly result;
    const VarsPtr ty = VarSet::make({"t", "y"});
    const Poly t = Poly::variable(d_->ring, ty, d_->cap, 0);
    const Poly y = Poly::variable(d_->ring, ty, d_->cap, 1);
    if (d_->theory == Theory::universal) {
        // t +_F chi(y) = loginv(l(t) - l(y))
        result = compose1(loginv(), compose1(d_->log1, t) - compose1(d_->log1, y));
    } else {
        result = compose2(sum_series(), t, compose1(inverse_series(), y));
    }
    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->diff2)
        d_->diff2 = std::move(result);
    return *d_->diff2;
}

const Poly& FormalGroupLaw::ptwo2() const
{
    {
        std::lock_guard<std::mutex> lock(d_->lazy_mutex);
        if (d_->ptwo2)
            return *d_->ptwo2;
    }
    // Ptwo = (t - y)/(t +_F chi(y)); the denominator equals (t - y) G with
    // G a unit, from one level past the cap so the quotient holds at cap
    const FormalGroupLaw up = at(d_->cap + 1);
    const Poly& den = up.diff2();
    const VarsPtr ty = den.vars();
    const Poly t = Poly::variable(up.ring(), ty, d_->cap + 1, 0);
    const Poly y = Poly::variable(up.ring(), ty, d_->cap + 1, 1);
    Poly g = den.divided_exact(t - y);
    bug_check(g.cap() == d_->cap, "Ptwo cap drift");
    Poly result = g.inverted().rebased(d_->ring);

    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->ptwo2)
        d_->ptwo2 = std::move(result);
    return *d_->ptwo2;
}

const Poly& FormalGroupLaw::chi_cofactor() const
{
    {
        std::lock_guard<std::mutex> lock(d_->lazy_mutex);
        if (d_->cofactor)
            return *d_->cofactor;
    }
    const FormalGroupLaw up = at(d_->cap + 1);
    const Poly u = Poly::variable(up.ring(), up.inverse_series().vars(), d_->cap + 1, 0);
    Poly w = u.divided_exact(up.inverse_series());
    bug_check(w.cap() == d_->cap, "chi cofactor cap drift");
    Poly result = w.rebased(d_->ring);

    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->cofactor)
        d_->cofactor = std::move(result);
    return *d_->cofactor;
}

const Poly& FormalGroupLaw::two1() const
{
    {
        std::lock_guard<std::mutex> lock(d_->lazy_mutex);
        if (d_->two1)
            return *d_->two1;
    }
    const VarsPtr u1 = VarSet::make({"u"});
    const Poly u = Poly::variable(d_->ring, u1, d_->cap, 0);
    Poly result;
    if (d_->theory == Theory::universal)
        result = compose1(loginv(), d_->log1 + d_->log1);
    else
        result = compose2(sum_series(), u, u);
    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->two1)
        d_->two1 = std::move(result);
    return *d_->two1;
}

const Poly& FormalGroupLaw::two_z() const
{
    {
        std::lock_guard<std::mutex> lock(d_->lazy_mutex);
        if (d_->two_z)
            return *d_->two_z;
    }
    const VarsPtr tz = VarSet::make({"t", "z"});
    const Poly t = Poly::variable(d_->ring, tz, d_->cap, 0);
    const Poly z = Poly::variable(d_->ring, tz, d_->cap, 1);
    Poly result;
    if (d_->theory == Theory::universal) {
        // l([2](t)) = 2 l(t)
        result = compose1(loginv(),
                          compose1(d_->log1, t).scaled(Rat(2)) + compose1(d_->log1, z));
    } else {
        result = compose2(sum_series(), two1().embedded(tz, {0}), z);
    }
    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->two_z)
        d_->two_z = std::move(result);
    return *d_->two_z;
}

const Poly& FormalGroupLaw::sum3() const
{
    {
        std::lock_guard<std::mutex> lock(d_->lazy_mutex);
        if (d_->sum3)
            return *d_->sum3;
    }
    const VarsPtr tyz = VarSet::make({"t", "y", "z"});
    Poly result;
    if (d_->theory == Theory::universal) {
        const Poly t = Poly::variable(d_->ring, tyz, d_->cap, 0);
        const Poly y = Poly::variable(d_->ring, tyz, d_->cap, 1);
        const Poly z = Poly::variable(d_->ring, tyz, d_->cap, 2);
        result = compose1(loginv(), compose1(d_->log1, t) + compose1(d_->log1, y) +
                                        compose1(d_->log1, z));
    } else {
        const Poly inner = sum_series().embedded(tyz, {0, 1});
        const Poly z = Poly::variable(d_->ring, tyz, d_->cap, 2);
        result = compose2(sum_series(), inner, z);
    }
    std::lock_guard<std::mutex> lock(d_->lazy_mutex);
    if (!d_->sum3)
        d_->sum3 = std::move(result);
    return *d_->sum3;
}

Poly FormalGroupLaw::log(bool allow_rational_extension) const
{
    RingPtr target = d_->ring;
    if (d_->ring->base() == Base::integers) {
        require(allow_rational_extension, "logarithm needs rational scalars");
        target = d_->ring->rational_extension();
    }
    if (d_->theory == Theory::universal)
        return d_->log1;
    const VarsPtr u1 = VarSet::make({"u"});
    Poly l = Poly::variable(target, u1, d_->cap, 0);
    for (int k = 1; k + 1 <= d_->cap; ++k) {
        const Coeff c = d_->Pinv.coefficient_of(0, k).constant_term().rebased(target);
        l = l + Poly::monomial(target, u1, d_->cap, Expo{k + 1}, c.scaled(Rat(1, k + 1)));
    }
    return l;
}

Poly FormalGroupLaw::formal_sum(const Poly& p, const Poly& q) const
{
    require(p.cap() == d_->cap && q.cap() == d_->cap, "cap mismatch");
    require(p.constant_term().is_zero() && q.constant_term().is_zero(),
            "formal sum needs zero constant terms");
    Poly a = p, b = q;
    if (!p.ring()->same_as(*d_->ring))
        a = p.widened(wider_ring(p.ring(), d_->ring));
    if (!q.ring()->same_as(*a.ring()))
        b = q.widened(a.ring());
    const Poly& f = sum_series();
    Poly f2 = d_->ring->same_as(*a.ring()) ? f : f.widened(a.ring());
    return compose2(f2, a, b);
}

Poly FormalGroupLaw::formal_inverse(const Poly& p) const
{
    require(p.cap() == d_->cap, "cap mismatch");
    require(p.constant_term().is_zero(), "formal inverse needs a zero constant term");
    Poly a = p;
    if (!p.ring()->same_as(*d_->ring))
        a = p.widened(wider_ring(p.ring(), d_->ring));
    const Poly& chi0 = inverse_series();
    Poly chi = d_->ring->same_as(*a.ring()) ? chi0 : chi0.widened(a.ring());
    return compose1(chi, a);
}

Poly FormalGroupLaw::n_series(int n, const Poly& p) const
{
    require(p.constant_term().is_zero(), "n-series needs a zero constant term");
    if (n == 0)
        return Poly::zero(p.ring(), p.vars(), p.cap());
    if (n < 0)
        return n_series(-n, formal_inverse(p));
    Poly acc = p;
    for (int i = 1; i < n; ++i)
        acc = formal_sum(acc, p);
    return acc;
}

Poly FormalGroupLaw::ptwo(const Poly& t, const Poly& y) const
{
    require(t.cap() == d_->cap && y.cap() == d_->cap, "cap mismatch");
    Poly f2 = ptwo2();
    if (!f2.ring()->same_as(*t.ring()))
        f2 = f2.widened(wider_ring(f2.ring(), t.ring()));
    Poly a = t, b = y;
    if (!a.ring()->same_as(*f2.ring()))
        a = a.widened(f2.ring());
    if (!b.ring()->same_as(*f2.ring()))
        b = b.widened(f2.ring());
    return compose2(f2, a, b);
}

std::vector<Coeff> specialization_images(const RingPtr& universal_ring, Theory target)
{
    require(universal_ring && universal_ring->is_universal_family(),
            "specialization source must be Q[m1..mD]");
    require(target != Theory::universal, "specialization target must be a concrete theory");
    const int D = universal_ring->generator_count();

    const FormalGroupLaw tf = FormalGroupLaw::make(target, D + 1);
    const Poly l = tf.log(true);

    std::vector<Coeff> images;
    images.reserve(static_cast<size_t>(D));
    for (int k = 1; k <= D; ++k)
        images.push_back(l.coefficient_of(0, k + 1).constant_term());
    return images;
}

Poly specialize(const Poly& p, Theory target)
{
    require(p.ring()->is_universal_family(), "specialize expects a universal-ring input");
    const std::vector<Coeff> images = specialization_images(p.ring(), target);
    const RingPtr target_ring = FormalGroupLaw::make(target, 1).ring();
    const RingPtr ext = target_ring->rational_extension();
    std::vector<Coeff> ext_images;
    ext_images.reserve(images.size());
    for (const auto& c : images)
        ext_images.push_back(c.rebased(ext));
    const Poly mapped = p.mapped_coeffs(ext, ext_images);

    if (target_ring->base() == Base::integers)
        require(mapped.all_coeffs_integral(), "non-integral specialization result");
    return mapped.rebased(target_ring);
}

} // namespace cobord
