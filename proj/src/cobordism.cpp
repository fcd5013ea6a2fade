#include "cobord/cobordism.hpp"

#include <algorithm>

#include "cobord/error.hpp"
#include "cobord/symfun.hpp"

namespace cobord {

namespace {

std::vector<std::string> root_names(const std::string& stem, int count, bool with_z)
{
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i)
        names.push_back(stem + std::to_string(i));
    if (with_z)
        names.push_back("z");
    return names;
}

} // namespace

ChernRoots ChernRoots::plain(const FormalGroupLaw& law, int n, const std::string& stem)
{
    require(n >= 1, "need at least one root");
    ChernRoots c(law);
    c.kind_ = Kind::plain;
    c.n_ = n;
    c.rank_ = n;
    c.vars_ = VarSet::make(root_names(stem, n, false));
    return c;
}

ChernRoots ChernRoots::symplectic(const FormalGroupLaw& law, int n, bool twisted)
{
    require(n >= 1, "need at least one root");
    ChernRoots c(law);
    c.kind_ = Kind::symplectic;
    c.n_ = n;
    c.rank_ = 2 * n;
    c.twisted_ = twisted;
    c.vars_ = VarSet::make(root_names("y", n, twisted));
    c.z_var_ = twisted ? n : -1;
    return c;
}

ChernRoots ChernRoots::orthogonal(const FormalGroupLaw& law, int N, bool twisted)
{
    require(N >= 2, "orthogonal rank too small");
    ChernRoots c(law);
    c.kind_ = Kind::orthogonal;
    c.n_ = N / 2;
    c.rank_ = N;
    c.twisted_ = twisted;
    const int base = c.n_ + (N % 2); // odd rank carries the extra root
    c.vars_ = VarSet::make(root_names("y", base, twisted));
    c.z_var_ = twisted ? base : -1;
    return c;
}

std::vector<Poly> ChernRoots::root_series(const PolySpace& sp, const FormalGroupLaw& law_at) const
{
    require(law_at.cap() == sp.cap, "cap mismatch");
    for (int i = 0; i < vars_->count(); ++i)
        require(sp.vars->count() > i && sp.vars->names()[static_cast<size_t>(i)] ==
                                            vars_->names()[static_cast<size_t>(i)],
                "space does not extend the context variables");

    // roots are pure out-variable series: terms past the context cap never
    // survive the pruning, so build small and claim the requested cap
    const int c0 = std::min(sp.cap, law_.cap());
    const FormalGroupLaw small = law_at.at(c0);
    const PolySpace ssp{small.ring(), sp.vars, c0};
    auto lift = [&](Poly p) {
        if (!p.ring()->same_as(*sp.ring))
            p = p.widened(wider_ring(p.ring(), sp.ring));
        return p.with_cap(sp.cap);
    };

    std::vector<Poly> roots;
    const int base = (kind_ == Kind::orthogonal && rank_ % 2) ? n_ + 1 : n_;
    for (int i = 0; i < base; ++i)
        roots.push_back(sp.var(i));
    if (kind_ != Kind::plain) {
        for (int i = 0; i < n_; ++i) {
            // chi(y_i) +_F chi(z) = chi(y_i +_F z)
            Poly inner = twisted_ ? small.sum_series().embedded(ssp.vars, {i, z_var_})
                                  : ssp.var(i);
            roots.push_back(lift(compose1(small.inverse_series(), inner)));
        }
    }
    bug_check(static_cast<int>(roots.size()) == rank_, "root count drifted");
    return roots;
}

// ---- universal Schur functions ------------------------------------------

Poly universal_schur(const FormalGroupLaw& law, const PolySpace& out_space, int n,
                     const IndexVec& I)
{
    require(n >= 1, "need at least one variable");
    require(nonzero_length(I) <= n, "index vector longer than the root count");
    for (int x : I)
        require(x >= 0, "negative index entry");

    std::vector<FactorRef> factors;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            factors.push_back(FactorRef::diff(i, j));
    const std::vector<SignedPerm> reps = enumerate_group(n, GroupKind::S);

    const IndexVec lam = padded(I, static_cast<size_t>(n));
    auto numer = [&](const PolySpace& sp, const FormalGroupLaw&) {
        Expo e(static_cast<size_t>(sp.vars->count()), 0);
        for (int i = 0; i < n; ++i)
            e[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (n - 1 - i);
        return Poly::monomial(sp.ring, sp.vars, sp.cap, e, Coeff::one(sp.ring));
    };
    Poly raw = symmetrize(law, n, out_space, reps, numer, factors);
    return anchor_result(raw, law);
}

Poly universal_schur(const ChernRoots& ctx, const IndexVec& I)
{
    require(ctx.kind() == ChernRoots::Kind::plain, "universal Schur functions use plain roots");
    return universal_schur(ctx.law(), ctx.space(), ctx.n(), I);
}

// ---- Segre classes -------------------------------------------------------

const Poly& SegreTable::at(int m) const
{
    auto it = values.find(m);
    require(it != values.end(), "index outside the materialized window");
    return it->second;
}

SegreTable segre_table(const ChernRoots& ctx, int mlo, int mhi)
{
    require(mlo <= mhi, "empty index range");
    const PolySpace out = ctx.space();
    // targets e = -m; declare the largest
    ExpansionPlan plan(ctx.law(), out, {{"t!", -mlo, ctx.rank()}});
    plan.times_segre(0, ctx.root_series(plan.space(), plan.law()));
    plan.set_window(0, -mhi, plan.internal_cap());

    SegreTable table;
    auto raw = plan.extract_table(-mhi, -mlo);
    for (int m = mlo; m <= mhi; ++m)
        table.values.emplace(m, anchor_result(raw.at(-m), ctx.law()));
    return table;
}

SegreTable segre_relative(const ChernRoots& ctxE, const std::vector<int>& rootsF, int mlo,
                          int mhi)
{
    require(mlo <= mhi, "empty index range");
    require(ctxE.kind() == ChernRoots::Kind::plain, "relative classes use plain roots");
    const PolySpace out = ctxE.space();
    const int nF = static_cast<int>(rootsF.size());

    // S(E - F; 1/t) = Pinv * S(E;1/t) / S(F;1/t).  A nonempty F contributes
    // t^{-nF} * P(t) * prod_F (t +_F chi(x_j)) and its P cancels the
    // explicit Pinv prefactor; the zero bundle has unit Segre series, so an
    // empty F leaves the prefactor standing.  The t^{-nF} shift moves into
    // the targets.
    ExpansionPlan plan(ctxE.law(), out, {{"t!", -mlo + nF, ctxE.rank()}});
    plan.times_segre(0, ctxE.root_series(plan.space(), plan.law()));
    if (rootsF.empty())
        plan.times_pinv(0);
    for (int vi : rootsF) {
        require(vi >= 0 && vi < out.vars->count(), "relative root index out of range");
        plan.times(plan.master_diff(plan.aux_var(0), vi));
    }
    plan.set_window(0, -mhi + nF, plan.internal_cap());

    SegreTable table;
    auto raw = plan.extract_table(-mhi + nF, -mlo + nF);
    for (int m = mlo; m <= mhi; ++m)
        table.values.emplace(m, anchor_result(raw.at(-m + nF), ctxE.law()));
    return table;
}

// ---- one-row functions ----------------------------------------------------

Poly new_universal_schur_segre(const ChernRoots& ctx, int m)
{
    return segre_table(ctx, m, m).at(m);
}

Poly new_universal_schur_closed(const ChernRoots& ctx, int m)
{
    require(ctx.kind() == ChernRoots::Kind::plain, "one-row functions use plain roots");
    const FormalGroupLaw& law = ctx.law();
    const int cap = law.cap();
    const int n = ctx.n();

    // sum_{k,l} [CP^k] P_l(y) h_{k+l+m}(y); indices bounded by the cap
    // through the exact degree of h and the positivity of deg P_l
    const int lmax = cap + std::max(-m, 0);
    const FormalGroupLaw big = law.at(lmax);

    // P_l(y_n): coefficient of t^l in prod_j Ptwo(t, y_j), folded per root
    const PolySpace sp{big.ring(), ctx.space().vars, cap};
    std::vector<Poly> P_l(static_cast<size_t>(lmax) + 1, sp.zero());
    P_l[0] = sp.one();
    {
        const Poly& p2 = big.ptwo2();
        for (int j = 0; j < n; ++j) {
            // slice Ptwo(t, y_j) by t-degree, with y -> y_j
            std::vector<Poly> slice(static_cast<size_t>(lmax) + 1, sp.zero());
            for (const auto& [e, c] : p2.terms()) {
                const int l = e[0], k = e[1];
                if (l > lmax || k > cap)
                    continue;
                Expo ee(static_cast<size_t>(sp.vars->count()), 0);
                ee[static_cast<size_t>(j)] = k;
                slice[static_cast<size_t>(l)] =
                    slice[static_cast<size_t>(l)] +
                    Poly::monomial(sp.ring, sp.vars, cap, ee, c);
            }
            std::vector<Poly> next(static_cast<size_t>(lmax) + 1, sp.zero());
            for (int l = 0; l <= lmax; ++l)
                for (int a = 0; a <= l; ++a)
                    if (!P_l[static_cast<size_t>(l - a)].is_zero() &&
                        !slice[static_cast<size_t>(a)].is_zero())
                        next[static_cast<size_t>(l)] =
                            next[static_cast<size_t>(l)] +
                            P_l[static_cast<size_t>(l - a)] * slice[static_cast<size_t>(a)];
            P_l = std::move(next);
        }
    }

    std::vector<int> all_vars;
    for (int i = 0; i < n; ++i)
        all_vars.push_back(i);

    Poly acc = sp.zero();
    for (int k = 0; k <= lmax; ++k) {
        const Coeff cpk = big.Pinv().coefficient_of(0, k).constant_term();
        if (cpk.is_zero())
            continue;
        for (int l = 0; l <= lmax; ++l) {
            const int h_idx = k + l + m;
            if (h_idx < 0 || h_idx > cap)
                continue;
            if (P_l[static_cast<size_t>(l)].is_zero())
                continue;
            const Poly h = complete_h(sp, all_vars, h_idx);
            if (h.is_zero())
                continue;
            acc = acc + (P_l[static_cast<size_t>(l)] * h).scaled(cpk);
        }
    }
    return anchor_result(acc, law);
}

Poly new_universal_schur(const ChernRoots& ctx, int m)
{
    const Poly via_segre = new_universal_schur_segre(ctx, m);
    const Poly closed = new_universal_schur_closed(ctx, m);
    bug_check(via_segre.rebased(closed.ring()) == closed,
              "one-row routes disagree at index " + std::to_string(m));
    return via_segre;
}

// ---- quadratic functions ---------------------------------------------------

namespace {

void check_symplectic_untwisted(const ChernRoots& ctx)
{
    require(ctx.kind() == ChernRoots::Kind::symplectic, "quadratic functions need a symplectic context");
    require(!ctx.twisted(), "quadratic functions fix the twist to zero");
}

std::vector<FactorRef> quadratic_factors(int q, int n)
{
    std::vector<FactorRef> factors;
    for (int i = 0; i < q; ++i)
        factors.push_back(FactorRef::two(i));
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < n; ++j) {
            factors.push_back(FactorRef::sum(i, j));
            factors.push_back(FactorRef::diff(i, j));
        }
    return factors;
}

} // namespace

Poly quadratic_universal_schur(const ChernRoots& ctx, const IndexVec& I)
{
    check_symplectic_untwisted(ctx);
    const int n = ctx.n();
    const int q = static_cast<int>(I.size());
    require(q <= n, "index vector longer than the isotropic rank");
    for (size_t i = 0; i < I.size(); ++i) {
        require(I[i] >= 0, "negative index entry");
        require(I[i] + 2 * n - 2 * static_cast<int>(i) - 1 >= 0, "exponent fell below zero");
    }

    const std::vector<SignedPerm> reps = enumerate_cosets(n, GroupKind::C, Parabolic::c_fix(q));
    auto numer = [&](const PolySpace& sp, const FormalGroupLaw&) {
        Expo e(static_cast<size_t>(sp.vars->count()), 0);
        for (int i = 0; i < q; ++i)
            e[static_cast<size_t>(i)] = I[static_cast<size_t>(i)] + 2 * n - 2 * i - 1;
        return Poly::monomial(sp.ring, sp.vars, sp.cap, e, Coeff::one(sp.ring));
    };
    Poly raw = symmetrize(ctx.law(), n, ctx.space(), reps, numer, quadratic_factors(q, n));
    if (ctx.law().ring()->base() == Base::integers)
        require(raw.all_coeffs_integral(), "non-integral quadratic value");
    return anchor_result(raw, ctx.law());
}

Poly quadratic_via_gf(const ChernRoots& ctx, const IndexVec& lambda)
{
    check_symplectic_untwisted(ctx);
    require(is_partition(lambda), "generating-function route needs a partition");
    const int n = ctx.n();
    const int q = static_cast<int>(lambda.size());
    require(q <= n, "partition longer than the isotropic rank");

    // coefficient of prod u_i^{-lambda_i} in prod_i s(u_i) x cross factors;
    // the 1/u_j in each cross factor shifts target j by +2j (0-based)
    std::vector<AuxSpec> aux;
    for (int i = 0; i < q; ++i)
        aux.push_back({"u" + std::to_string(i + 1) + "!",
                       -lambda[static_cast<size_t>(i)] + 2 * i, 2 * n});
    ExpansionPlan plan(ctx.law(), ctx.space(), aux);
    const std::vector<Poly> roots = ctx.root_series(plan.space(), plan.law());
    for (int i = 0; i < q; ++i)
        plan.times_segre(i, roots);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            plan.times(plan.master_diff(plan.aux_var(j), plan.aux_var(i)));
            plan.times(plan.master_sum(plan.aux_var(j), plan.aux_var(i)));
        }
    return anchor_result(plan.extract(), ctx.law());
}

Poly k_quadratic_det(const ChernRoots& ctx, const IndexVec& lambda)
{
    check_symplectic_untwisted(ctx);
    require(ctx.law().theory() == Theory::multiplicative,
            "determinantal route is a K-theory statement");
    require(is_partition(lambda), "determinantal route needs a partition");
    const int q = static_cast<int>(lambda.size());
    require(q <= ctx.n(), "partition longer than the isotropic rank");
    const int cap = ctx.law().cap();
    if (q == 0)
        return ctx.space().one();

    int mlo = 0;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            mlo = std::min(mlo, lambda[static_cast<size_t>(i)] + 2 * (j - i));
    const SegreTable G = segre_table(ctx, mlo, cap);

    const Coeff beta = Coeff::generator(ctx.law().ring(), 0);
    const PolySpace sp = ctx.space();
    std::vector<std::vector<Poly>> mat(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            Poly entry = sp.zero();
            for (int k = 0;; ++k) {
                const int idx = lambda[static_cast<size_t>(i)] + 2 * (j - i) + k;
                if (idx > cap)
                    break;
                if (i - j >= 0 && k > i - j)
                    break;
                const Rat binom = rat_binomial(i - j, static_cast<unsigned>(k));
                if (binom == 0)
                    continue;
                const Coeff w = beta.pow(static_cast<unsigned>(k))
                                    .scaled(k % 2 ? -binom : binom);
                entry = entry + G.at(idx).rebased(sp.ring).scaled(w);
            }
            mat[static_cast<size_t>(i)].push_back(std::move(entry));
        }
    }
    return poly_det(sp, mat);
}

} // namespace cobord
