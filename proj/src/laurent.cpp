#include "cobord/laurent.hpp"

#include <algorithm>

#include "cobord/error.hpp"

namespace cobord {

namespace {

// factor is a plain variable: return its index
std::optional<int> as_variable(const Poly& p)
{
    if (p.term_count() != 1)
        return std::nullopt;
    const auto& [e, c] = p.terms()[0];
    if (!(c.is_scalar() && c.scalar_value() == 1))
        return std::nullopt;
    int idx = -1;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (e[i] != 1 || idx >= 0)
            return std::nullopt;
        idx = static_cast<int>(i);
    }
    if (idx < 0)
        return std::nullopt;
    return idx;
}

} // namespace

ExpansionPlan::ExpansionPlan(const FormalGroupLaw& fgl, const PolySpace& out_space,
                             const std::vector<AuxSpec>& aux)
    : law_(fgl), out_space_(out_space)
{
    require(out_space.cap == fgl.cap(), "cap mismatch");

    int capI = out_space.cap;
    std::vector<std::string> names = out_space.vars->names();
    for (const auto& a : aux) {
        require(out_space.vars->index_of(a.name) < 0, "auxiliary shadows an output variable");
        require(a.n_roots >= 0, "negative root count");
        names.push_back(a.name);
        capI += a.n_roots + std::max(a.target, 0);
    }
    const VarsPtr vars = VarSet::make(names);

    law_ = fgl.at(capI);
    plan_space_ = PolySpace{law_.ring(), vars, capI};

    channels_.resize(aux.size());
    for (size_t i = 0; i < aux.size(); ++i) {
        channels_[i].var = out_space.vars->count() + static_cast<int>(i);
        channels_[i].target = aux[i].target;
        channels_[i].n_roots = aux[i].n_roots;
    }
    active_channels_ = channels_.size();
    integrand_ = plan_space_.one();
}

int ExpansionPlan::aux_var(int channel) const
{
    require(channel >= 0 && channel < static_cast<int>(channels_.size()), "no such channel");
    return channels_[static_cast<size_t>(channel)].var;
}

bool ExpansionPlan::prune_term(const Expo& e) const
{
    // a term survives if its output degree plus every live channel's
    // forced future contribution max(0, d_a - n_a - e_a) still fits
    int budget = out_space_.cap;
    for (size_t i = 0; i < active_channels_; ++i) {
        const Channel& ch = channels_[i];
        if (!ch.roots_vanish)
            continue;
        const int d = e[static_cast<size_t>(ch.var)];
        budget -= std::max(0, d - ch.n_roots - ch.target);
        if (budget < 0)
            return true;
    }
    int out_deg = 0;
    const int nout = out_space_.vars->count();
    for (int i = 0; i < nout; ++i)
        out_deg += e[static_cast<size_t>(i)];
    return out_deg > budget;
}

void ExpansionPlan::times(const Poly& factor)
{
    require(factor.cap() == plan_space_.cap, "cap mismatch");
    Poly f = factor;
    if (!f.ring()->same_as(*plan_space_.ring))
        f = f.widened(wider_ring(f.ring(), plan_space_.ring));
    integrand_ = integrand_.mul(f, [this](const Expo& e) { return prune_term(e); });
}

void ExpansionPlan::times_monomial(int var, int power)
{
    require(power >= 0, "negative monomial power");
    Expo e(static_cast<size_t>(plan_space_.vars->count()), 0);
    e[static_cast<size_t>(var)] = power;
    times(Poly::monomial(plan_space_.ring, plan_space_.vars, plan_space_.cap, e,
                         Coeff::one(plan_space_.ring)));
}

void ExpansionPlan::times_pinv(int channel)
{
    const int var = aux_var(channel);
    // Pinv lives over ("z"); relabel onto the auxiliary
    times(law_.Pinv().embedded(plan_space_.vars, {var}));
}

int ExpansionPlan::allowance(int var) const
{
    for (const auto& ch : channels_)
        if (ch.var == var)
            return std::max(0, ch.target + out_space_.cap);
    return out_space_.cap;
}

int ExpansionPlan::joint_allowance(const std::vector<int>& vars) const
{
    // a kept product term satisfies sum_a (d_a - n_a - e_a)^+ + r <= cap,
    // so one factor's slots jointly hold at most sum e_a^+ plus one cap
    int s = out_space_.cap;
    for (int v : vars)
        for (const auto& ch : channels_)
            if (ch.var == v)
                s += std::max(0, ch.target);
    return std::max(1, std::min(plan_space_.cap, s));
}

// Relabel a master series onto plan variables and raise its cap.  The
// master is built at the sum of its slots' allowances; pruning discards
// every product that would have touched the missing higher terms, so
// claiming the plan cap is sound.
Poly ExpansionPlan::to_plan(const Poly& small, const std::vector<int>& var_map) const
{
    Poly p = small;
    if (!p.ring()->same_as(*plan_space_.ring))
        p = p.widened(wider_ring(p.ring(), plan_space_.ring));
    return p.embedded(plan_space_.vars, var_map).with_cap(plan_space_.cap);
}

Poly ExpansionPlan::master_diff(int var_t, int var_y) const
{
    return to_plan(law_.at(joint_allowance({var_t, var_y})).diff2(), {var_t, var_y});
}

Poly ExpansionPlan::master_sum(int var_t, int var_y) const
{
    return to_plan(law_.at(joint_allowance({var_t, var_y})).sum_series(), {var_t, var_y});
}

Poly ExpansionPlan::master_sum_z(int var_t, int var_y, int var_z) const
{
    return to_plan(law_.at(joint_allowance({var_t, var_y, var_z})).sum3(),
                   {var_t, var_y, var_z});
}

Poly ExpansionPlan::master_two(int var_t) const
{
    return to_plan(law_.at(joint_allowance({var_t})).two1(), {var_t});
}

Poly ExpansionPlan::master_two_z(int var_t, int var_z) const
{
    return to_plan(law_.at(joint_allowance({var_t, var_z})).two_z(), {var_t, var_z});
}

void ExpansionPlan::times_segre(int channel, const std::vector<Poly>& roots, bool with_pinv)
{
    Channel& ch = channels_[static_cast<size_t>(channel)];
    require(static_cast<int>(roots.size()) == ch.n_roots, "root count differs from declaration");
    require(ch.roots.empty(), "channel already carries a Laurent block");

    times_monomial(ch.var, ch.n_roots);
    if (with_pinv)
        times_pinv(channel);

    const int s = joint_allowance({ch.var});
    Poly p2 = law_.at(s).ptwo2();
    if (!p2.ring()->same_as(*plan_space_.ring))
        p2 = p2.widened(wider_ring(p2.ring(), plan_space_.ring));
    p2 = p2.with_cap(plan_space_.cap);

    const Poly t = plan_space_.var(ch.var);
    for (const auto& r : roots) {
        require(r.cap() == plan_space_.cap, "cap mismatch");
        if (const auto rv = as_variable(r))
            times(p2.embedded(plan_space_.vars, {ch.var, *rv}));
        else
            times(compose2(p2, t, r.widened(p2.ring())));
        if (!r.constant_term().is_zero())
            ch.roots_vanish = false;
    }
    ch.roots = roots;
}

void ExpansionPlan::set_window(int channel, int lo, int hi)
{
    require(lo <= hi, "empty window");
    channels_[static_cast<size_t>(channel)].window = {lo, hi};
}

std::pair<int, int> ExpansionPlan::window(int channel) const
{
    const Channel& ch = channels_[static_cast<size_t>(channel)];
    if (ch.window)
        return *ch.window;
    // defaults from the degree bounds: positive exponents up to the
    // integrand's degree, negative ones until H-levels outrun the cap
    const int d_pos = integrand_.degree_in(ch.var);
    return {ch.target - d_pos - out_space_.cap, d_pos};
}

Poly ExpansionPlan::eliminate(const Poly& integrand, size_t channel, int target)
{
    const Channel& ch = channels_[channel];
    active_channels_ = channel; // this channel and later ones are being consumed
    const auto [wlo, whi] = ch.window ? *ch.window : std::pair<int, int>{target, target};
    require(target >= wlo && target <= whi, "target outside window");

    std::map<int, Poly> by_deg = integrand.collect(ch.var);
    const int d_max = by_deg.empty() ? -1 : by_deg.rbegin()->first;
    const int m_hi = d_max - ch.n_roots - target;
    if (m_hi < 0)
        return plan_space_.zero();

    // H_m: complete symmetric functions of the block's roots
    int m_cap = m_hi;
    if (ch.roots_vanish)
        m_cap = std::min(m_cap, out_space_.cap);
    std::vector<Poly> H(static_cast<size_t>(m_cap) + 1, plan_space_.zero());
    H[0] = plan_space_.one();
    for (const auto& r : ch.roots) {
        // fold: H'_m = sum_k H_{m-k} r^k
        std::vector<Poly> rp(static_cast<size_t>(m_cap) + 1, plan_space_.zero());
        rp[0] = plan_space_.one();
        for (int k = 1; k <= m_cap; ++k) {
            rp[static_cast<size_t>(k)] =
                rp[static_cast<size_t>(k - 1)].mul(r, [this](const Expo& e) { return prune_term(e); });
            if (ch.roots_vanish && rp[static_cast<size_t>(k)].is_zero())
                break;
        }
        std::vector<Poly> next(static_cast<size_t>(m_cap) + 1, plan_space_.zero());
        for (int m = 0; m <= m_cap; ++m)
            for (int k = 0; k <= m; ++k)
                if (!H[static_cast<size_t>(m - k)].is_zero() && !rp[static_cast<size_t>(k)].is_zero())
                    next[static_cast<size_t>(m)] =
                        next[static_cast<size_t>(m)] +
                        H[static_cast<size_t>(m - k)].mul(
                            rp[static_cast<size_t>(k)],
                            [this](const Expo& e) { return prune_term(e); });
        H = std::move(next);
    }
    if (ch.roots_vanish)
        for (int m = 0; m <= m_cap; ++m)
            bug_check(H[static_cast<size_t>(m)].is_zero() ||
                          H[static_cast<size_t>(m)].min_degree() >= m,
                      "Laurent tail lost a root variable");

    Poly acc = plan_space_.zero();
    for (const auto& [d, w] : by_deg) {
        const int m = d - ch.n_roots - target;
        if (m < 0 || m > m_cap)
            continue;
        if (H[static_cast<size_t>(m)].is_zero())
            continue;
        acc = acc + w.mul(H[static_cast<size_t>(m)],
                          [this](const Expo& e) { return prune_term(e); });
    }
    return acc;
}

Poly ExpansionPlan::restrict_to_out(const Poly& p) const
{
    Poly out(p.ring(), out_space_.vars, out_space_.cap);
    const int nout = out_space_.vars->count();
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = static_cast<size_t>(nout); i < e.size(); ++i)
            bug_check(e[i] == 0, "auxiliary variable survived extraction");
        Expo small(e.begin(), e.begin() + nout);
        if (expo_degree(small) <= out_space_.cap)
            out = out + Poly::monomial(p.ring(), out_space_.vars, out_space_.cap, small, c);
    }
    return out;
}

Poly ExpansionPlan::extract()
{
    Poly work = integrand_;
    for (size_t k = channels_.size(); k-- > 0;)
        work = eliminate(work, k, channels_[k].target);
    active_channels_ = channels_.size();
    return restrict_to_out(work);
}

std::map<int, Poly> ExpansionPlan::extract_table(int lo, int hi)
{
    require(channels_.size() == 1, "tables need a single auxiliary");
    require(lo <= hi, "empty target range");
    std::map<int, Poly> out;
    for (int e = lo; e <= hi; ++e) {
        out.emplace(e, restrict_to_out(eliminate(integrand_, 0, e)));
        active_channels_ = channels_.size();
    }
    return out;
}

Poly anchor_result(const Poly& wide, const FormalGroupLaw& law)
{
    if (!law.ring()->is_universal_family())
        return wide.rebased(law.ring());
    int needed = law.ring()->generator_count();
    for (const auto& [e, c] : wide.terms())
        for (const auto& [m, r] : c.terms())
            needed = std::max(needed, mono_max_index(m) + 1);
    return wide.rebased(Ring::universal(needed));
}

} // namespace cobord
