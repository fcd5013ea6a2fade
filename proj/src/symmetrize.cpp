#include "cobord/symmetrize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "cobord/error.hpp"

namespace cobord {

namespace {

using CoreId = std::tuple<CoreKind, int, int>;

// image of a pre-action factor under w: the core it clears against and
// whether the formal inverse wraps it
std::pair<CoreId, bool> factor_image(const FactorRef& f, const SignedPerm& w)
{
    if (f.kind == CoreKind::Two) {
        const int a = w.perm[static_cast<size_t>(f.i)];
        const bool s = w.signs[static_cast<size_t>(f.i)];
        return {{CoreKind::Two, a, a}, s};
    }
    const int a = w.perm[static_cast<size_t>(f.i)];
    const int b = w.perm[static_cast<size_t>(f.j)];
    const bool sa = w.signs[static_cast<size_t>(f.i)];
    const bool sb = w.signs[static_cast<size_t>(f.j)];
    bug_check(a != b, "factor collapsed to one slot");

    // reduce to the sign pattern of y_a +_F (y_b or chi(y_b))
    bool plus_b = (f.kind == CoreKind::Sum) ? !sb : sb; // second argument is +y_b?
    if (!sa && plus_b)
        return {{CoreKind::Sum, std::min(a, b), std::max(a, b)}, false};
    if (sa && !plus_b)
        return {{CoreKind::Sum, std::min(a, b), std::max(a, b)}, true}; // chi(y_a +_F y_b)
    if (!sa && !plus_b) {
        // y_a +_F chi(y_b)
        if (a < b)
            return {{CoreKind::Diff, a, b}, false};
        return {{CoreKind::Diff, b, a}, true}; // chi(y_b +_F chi(y_a))
    }
    // chi(y_a) +_F y_b = y_b +_F chi(y_a)
    if (b < a)
        return {{CoreKind::Diff, b, a}, false};
    return {{CoreKind::Diff, a, b}, true};
}

} // namespace

Poly symmetrize(const FormalGroupLaw& fgl, int n_slots, const PolySpace& out_space,
                const std::vector<SignedPerm>& reps,
                const std::function<Poly(const PolySpace&, const FormalGroupLaw&)>& numerator,
                const std::vector<FactorRef>& factors)
{
    require(!reps.empty(), "no coset representatives");
    for (const auto& w : reps)
        require(w.n() == n_slots, "representative rank mismatch");
    require(out_space.vars->count() >= n_slots, "fewer variables than root slots");
    require(out_space.cap == fgl.cap(), "cap mismatch");

    // the full core family across all representatives
    std::set<CoreId> cores;
    for (const auto& w : reps)
        for (const auto& f : factors)
            cores.insert(factor_image(f, w).first);

    const int d0 = static_cast<int>(cores.size());
    const int capI = out_space.cap + d0;
    const FormalGroupLaw law = fgl.at(capI);
    const PolySpace sp{law.ring(), out_space.vars, capI};

    // core polynomials (master series relabeled onto the slots) and their
    // chi cofactors W(core)
    std::map<CoreId, Poly> core_poly;
    std::map<CoreId, Poly> core_cof;
    const Poly cof = law.chi_cofactor(); // W(u) = u/chi(u)
    for (const CoreId& id : cores) {
        const auto [kind, a, b] = id;
        Poly val = sp.zero();
        if (kind == CoreKind::Two)
            val = law.two1().embedded(sp.vars, {a});
        else if (kind == CoreKind::Sum)
            val = law.sum_series().embedded(sp.vars, {a, b});
        else
            val = law.diff2().embedded(sp.vars, {a, b});
        core_poly.emplace(id, val);
    }

    Poly denom = sp.one();
    for (const auto& [id, val] : core_poly)
        denom = denom * val;
    bug_check(denom.min_degree() == d0, "core product lost its lowest level");

    const Poly base_numer = numerator(sp, law);
    Poly total = sp.zero();
    for (const auto& w : reps) {
        std::set<CoreId> used;
        Poly numer = act(w, base_numer, law);
        for (const auto& f : factors) {
            const auto [id, twisted] = factor_image(f, w);
            bug_check(used.insert(id).second, "repeated core inside one summand");
            if (twisted) {
                auto it = core_cof.find(id);
                if (it == core_cof.end())
                    it = core_cof.emplace(id, compose1(cof, core_poly.at(id))).first;
                numer = numer * it->second;
            }
        }
        for (const auto& [id, val] : core_poly)
            if (!used.count(id))
                numer = numer * val;
        total = total + numer;
    }

    if (total.is_zero())
        return out_space.zero();
    Poly result = total.divided_exact(denom);
    bug_check(result.cap() == out_space.cap, "symmetrizer cap drift");
    return result;
}

} // namespace cobord
