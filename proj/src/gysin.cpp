#include "cobord/gysin.hpp"

#include <algorithm>

#include "cobord/error.hpp"

namespace cobord {

int FlagSpec::n() const
{
    switch (type) {
    case Type::A: return rank;
    case Type::C: return rank / 2;
    case Type::BD: return rank / 2;
    }
    throw error("bad flag type");
}

bool FlagSpec::full_flag() const
{
    for (size_t k = 0; k < q_seq.size(); ++k)
        if (q_seq[k] != static_cast<int>(k) + 1)
            return false;
    return !q_seq.empty();
}

void FlagSpec::validate() const
{
    require(!q_seq.empty(), "empty flag");
    for (size_t k = 0; k < q_seq.size(); ++k) {
        require(q_seq[k] >= 1, "flag dimensions are positive");
        if (k)
            require(q_seq[k] > q_seq[k - 1], "flag dimensions must increase");
    }
    if (type == Type::A) {
        require(rank >= 1, "rank too small");
        // q = n is the complete flag through the rank-one tail
        require(q() <= rank, "flag dimension exceeds the rank");
    } else if (type == Type::C) {
        require(rank >= 2 && rank % 2 == 0, "type C rank is even");
        require(q() <= n(), "flag dimension exceeds the isotropic rank");
    } else {
        require(rank >= 2, "rank too small");
        require(q() <= n(), "flag dimension exceeds the isotropic rank");
    }
}

ChernRoots context_for(const FormalGroupLaw& law, const FlagSpec& spec)
{
    spec.validate();
    switch (spec.type) {
    case FlagSpec::Type::A: return ChernRoots::plain(law, spec.rank);
    case FlagSpec::Type::C: return ChernRoots::symplectic(law, spec.n(), spec.twisted);
    case FlagSpec::Type::BD: return ChernRoots::orthogonal(law, spec.rank, spec.twisted);
    }
    throw error("bad flag type");
}

void check_block_symmetric(const Poly& f, const std::vector<int>& q_seq)
{
    int lo = 0;
    for (int hi : q_seq) {
        for (int i = lo; i + 1 < hi; ++i) {
            SignedPerm s = SignedPerm::identity(f.vars()->count());
            std::swap(s.perm[static_cast<size_t>(i)], s.perm[static_cast<size_t>(i) + 1]);
            require(act(s, f) == f, "input not symmetric within the flag blocks");
        }
        lo = hi;
    }
}

namespace {

// expected graded degree of the extraction result; anything past the cap
// cannot be represented and is rejected rather than silently truncated
void check_cap_budget(const FlagSpec& spec, const ChernRoots& ctx, const Poly& f)
{
    const int q = spec.q();
    int factor_grade = q * (q - 1) / 2; // pairs (t_j +_F chi(t_i))
    if (spec.type != FlagSpec::Type::A)
        factor_grade += q * (q - 1) / 2; // (t_j +_F t_i +_F z)
    if (spec.type == FlagSpec::Type::BD)
        factor_grade += q; // ([2](t_i) +_F z)
    int targets = 0;
    const int top = (spec.type == FlagSpec::Type::A)   ? ctx.n() - 1
                    : (spec.type == FlagSpec::Type::C) ? 2 * ctx.n() - 1
                                                       : ctx.rank() - 1;
    int qk_prev = 0;
    for (int qk : spec.q_seq) {
        for (int i = qk_prev + 1; i <= qk; ++i)
            targets += top - (qk - i);
        qk_prev = qk;
    }
    const int g_out = f.degree() + factor_grade - targets;
    require(g_out <= ctx.law().cap(),
            "cap exhausted: result grade " + std::to_string(g_out) + " exceeds cap");
}

// s_empty(t-block)^{-1} over the plan space: computed in a standalone
// block space to the block's joint allowance and relabeled onto its
// auxiliaries
Poly empty_schur_inverse(const ExpansionPlan& plan, const std::vector<int>& block_vars)
{
    const int k = static_cast<int>(block_vars.size());
    if (k <= 1)
        return plan.space().one();
    const int s = plan.joint_allowance(block_vars);

    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i)
        names.push_back("s" + std::to_string(i));
    const FormalGroupLaw small = plan.law().at(s);
    const PolySpace block{small.ring(), VarSet::make(names), s};
    Poly s0 = universal_schur(small, block, k, IndexVec{}).inverted();
    if (!s0.ring()->same_as(*plan.space().ring))
        s0 = s0.widened(wider_ring(s0.ring(), plan.space().ring));
    return s0.embedded(plan.space().vars, block_vars).with_cap(plan.internal_cap());
}

} // namespace

ExpansionPlan dp_plan(const FlagSpec& spec, const ChernRoots& ctx)
{
    spec.validate();
    const int q = spec.q();
    const int top = (spec.type == FlagSpec::Type::A)   ? ctx.n() - 1
                    : (spec.type == FlagSpec::Type::C) ? 2 * ctx.n() - 1
                                                       : ctx.rank() - 1;

    std::vector<AuxSpec> aux(static_cast<size_t>(q));
    int qk_prev = 0;
    size_t slot = 0;
    for (int qk : spec.q_seq) {
        for (int i = qk_prev + 1; i <= qk; ++i, ++slot)
            aux[slot] = {"t" + std::to_string(slot + 1) + "!", top - (qk - i), ctx.rank()};
        qk_prev = qk;
    }

    ExpansionPlan plan(ctx.law(), ctx.space(), aux);
    const PolySpace psp = plan.space();

    // s_empty^{-1} per flag block
    qk_prev = 0;
    for (int qk : spec.q_seq) {
        std::vector<int> block_vars;
        for (int i = qk_prev; i < qk; ++i)
            block_vars.push_back(plan.aux_var(i));
        plan.times(empty_schur_inverse(plan, block_vars));
        qk_prev = qk;
    }

    // pair factors
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            plan.times(plan.master_diff(plan.aux_var(j), plan.aux_var(i)));
            if (spec.type != FlagSpec::Type::A) {
                if (ctx.twisted())
                    plan.times(plan.master_sum_z(plan.aux_var(j), plan.aux_var(i), ctx.z_var()));
                else
                    plan.times(plan.master_sum(plan.aux_var(j), plan.aux_var(i)));
            }
        }
    if (spec.type == FlagSpec::Type::BD)
        for (int i = 0; i < q; ++i) {
            if (ctx.twisted())
                plan.times(plan.master_two_z(plan.aux_var(i), ctx.z_var()));
            else
                plan.times(plan.master_two(plan.aux_var(i)));
        }

    // Segre factor per auxiliary
    const std::vector<Poly> roots = ctx.root_series(psp, plan.law());
    for (int i = 0; i < q; ++i)
        plan.times_segre(i, roots);
    return plan;
}

Poly dp_apply(const ExpansionPlan& base, const FlagSpec& spec, const ChernRoots& ctx,
              const Poly& f)
{
    check_block_symmetric(f, spec.q_seq);
    check_cap_budget(spec, ctx, f);
    const int q = spec.q();

    ExpansionPlan plan = base;
    const PolySpace psp = plan.space();
    // f(t_1..t_q): the first q roots relabel onto the auxiliaries; later
    // roots act as base-class coefficients and pass through untouched
    std::vector<int> map_f(static_cast<size_t>(f.vars()->count()));
    for (int i = 0; i < f.vars()->count(); ++i) {
        require(i < psp.vars->count(), "input space larger than the context");
        map_f[static_cast<size_t>(i)] = i < q ? plan.aux_var(i) : i;
    }
    plan.times(f.rebased(psp.ring).embedded(psp.vars, map_f).truncated(psp.cap));
    return anchor_result(plan.extract(), ctx.law());
}

Poly pushforward_projective(const ChernRoots& ctx, const Poly& f_one_var)
{
    require(ctx.kind() == ChernRoots::Kind::plain, "projective pushforward uses plain roots");
    FlagSpec spec{FlagSpec::Type::A, ctx.n(), {1}, false};
    return dp_pushforward(spec, ctx, f_one_var);
}

Poly pushforward_quadric(const ChernRoots& ctx, const Poly& f_one_var)
{
    require(ctx.kind() == ChernRoots::Kind::orthogonal, "quadric pushforward needs an orthogonal context");
    require(f_one_var.vars()->count() == 1, "quadric pushforward takes one variable");
    FlagSpec spec{FlagSpec::Type::BD, ctx.rank(), {1}, ctx.twisted()};
    return dp_pushforward(spec, ctx, f_one_var);
}

Poly dp_pushforward(const FlagSpec& spec, const ChernRoots& ctx, const Poly& f)
{
    const ExpansionPlan plan = dp_plan(spec, ctx);
    return dp_apply(plan, spec, ctx, f);
}

Poly symmetrizer_gysin(const FlagSpec& spec, const ChernRoots& ctx, const Poly& f)
{
    spec.validate();
    check_block_symmetric(f, spec.q_seq);
    const int q = spec.q();
    const int n = ctx.n();

    std::vector<SignedPerm> reps;
    std::vector<FactorRef> factors;
    if (spec.type == FlagSpec::Type::A) {
        // blocks of the parabolic: flag blocks plus the residual block
        std::vector<int> blocks;
        int prev = 0;
        for (int qk : spec.q_seq) {
            blocks.push_back(qk - prev);
            prev = qk;
        }
        if (n - q > 0)
            blocks.push_back(n - q);
        reps = enumerate_cosets(n, GroupKind::S, Parabolic::s_blocks(blocks));
        // factors: pairs separated by some flag stage
        for (int qk : spec.q_seq)
            for (int i = 0; i < qk; ++i)
                for (int j = qk; j < n; ++j) {
                    bool have = false;
                    for (const auto& fr : factors)
                        if (fr.i == i && fr.j == j)
                            have = true;
                    if (!have)
                        factors.push_back(FactorRef::diff(i, j));
                }
    } else {
        require(spec.type == FlagSpec::Type::C, "no symmetrizer form for types B/D");
        require(!ctx.twisted(), "symmetrizer forms fix the twist to zero");
        const bool grassmann = spec.q_seq.size() == 1 && !spec.full_flag();
        if (spec.full_flag()) {
            reps = enumerate_cosets(n, GroupKind::C, Parabolic::c_fix(q));
            for (int i = 0; i < q; ++i) {
                factors.push_back(FactorRef::two(i));
                for (int j = i + 1; j < n; ++j) {
                    factors.push_back(FactorRef::sum(i, j));
                    factors.push_back(FactorRef::diff(i, j));
                }
            }
        } else if (grassmann) {
            reps = enumerate_cosets(n, GroupKind::C, Parabolic::sq_x_c(q));
            for (int i = 0; i < q; ++i) {
                factors.push_back(FactorRef::two(i));
                for (int j = q; j < n; ++j)
                    factors.push_back(FactorRef::diff(i, j));
                for (int j = i + 1; j < n; ++j)
                    factors.push_back(FactorRef::sum(i, j));
            }
        } else {
            throw error("type-C symmetrizer covers the full-flag and Grassmann cases");
        }
    }

    auto numer = [&](const PolySpace& sp, const FormalGroupLaw&) {
        std::vector<int> map_f(static_cast<size_t>(f.vars()->count()));
        for (int i = 0; i < f.vars()->count(); ++i)
            map_f[static_cast<size_t>(i)] = i;
        return f.rebased(sp.ring).embedded(sp.vars, map_f).truncated(sp.cap);
    };
    Poly raw = symmetrize(ctx.law(), n, ctx.space(), reps, numer, factors);
    return anchor_result(raw, ctx.law());
}

std::pair<Poly, Poly> pragacz_ratajski(const ChernRoots& ctx, const IndexVec& I, int q)
{
    require(ctx.kind() == ChernRoots::Kind::symplectic && !ctx.twisted(),
            "isotropic Grassmann pushforward needs an untwisted symplectic context");
    const int n = ctx.n();
    require(q >= 1 && q <= n, "invalid isotropic rank");
    require(static_cast<int>(I.size()) == q, "index length must equal q");
    IndexVec shifted(static_cast<size_t>(q));
    for (int i = 1; i <= q; ++i) {
        const int bound = 2 * n - q - i + 1;
        require(I[static_cast<size_t>(i - 1)] > bound,
                "index condition violated: need I_" + std::to_string(i) + " > " +
                    std::to_string(bound));
        shifted[static_cast<size_t>(i - 1)] = I[static_cast<size_t>(i - 1)] - bound;
    }

    // left side: Grassmann symmetrizer applied to s_I(y_1..y_q), which must
    // be produced at the symmetrizer's elevated cap
    const std::vector<SignedPerm> reps = enumerate_cosets(n, GroupKind::C, Parabolic::sq_x_c(q));
    std::vector<FactorRef> factors;
    for (int i = 0; i < q; ++i) {
        factors.push_back(FactorRef::two(i));
        for (int j = q; j < n; ++j)
            factors.push_back(FactorRef::diff(i, j));
        for (int j = i + 1; j < n; ++j)
            factors.push_back(FactorRef::sum(i, j));
    }
    auto numer = [&](const PolySpace& sp, const FormalGroupLaw& law_at) {
        return universal_schur(law_at, sp, q, I).rebased(sp.ring);
    };
    Poly lhs = anchor_result(symmetrize(ctx.law(), n, ctx.space(), reps, numer, factors),
                             ctx.law());
    Poly rhs = quadratic_universal_schur(ctx, shifted);
    return {lhs, rhs};
}

} // namespace cobord
