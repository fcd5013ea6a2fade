#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cobord/fgl.hpp"

namespace cobord {

// Windowed Laurent-coefficient extraction.
//
// A plan multiplies an integrand out of polynomial factors (everything
// expanded "in t": unit series, Ptwo factors, the numerator) and, per
// auxiliary variable, a block of factors 1/(t +_F chi(x_j)) expanded
// "in 1/t":
//
//   1/(t +_F chi(x)) = Ptwo(t, x) * sum_k x^k t^{-k-1}
//
// The Ptwo parts join the polynomial integrand; the geometric tails
// combine into t^{-n} * sum_m H_m t^{-m} with H_m the complete symmetric
// functions of the block's roots.  The coefficient of t^e is then the
// finite sum  sum_d W_d * H_{d-n-e}  over the integrand's t-degrees d.
//
// Auxiliaries are eliminated innermost (last declared) first.  All
// intermediate arithmetic runs at an internal cap derived from the
// declared channels; results are truncated back to the caller's cap.
struct AuxSpec {
    std::string name;
    int target = 0;  // exponent to extract
    int n_roots = 0; // size of the Laurent block attached to this auxiliary
};

class ExpansionPlan {
public:
    ExpansionPlan(const FormalGroupLaw& fgl, const PolySpace& out_space,
                  const std::vector<AuxSpec>& aux);

    const PolySpace& space() const { return plan_space_; }
    const FormalGroupLaw& law() const { return law_; }
    int aux_var(int channel) const;
    int internal_cap() const { return plan_space_.cap; }
    int out_var_count() const { return out_space_.vars->count(); }

    // integrand *= factor (factor over the plan space at the internal cap)
    void times(const Poly& factor);
    void times_monomial(int var, int power);
    // integrand *= 1/P(t_channel)
    void times_pinv(int channel);
    // integrand *= t^n / (P(t) prod_j (t +_F chi(roots[j]))) for t the
    // channel's auxiliary; roots are given over the plan space and their
    // count must match the declared n_roots.
    void times_segre(int channel, const std::vector<Poly>& roots, bool with_pinv = true);

    // materialized t-exponent window for one channel (defaults cover the
    // declared target; targets outside the window are errors)
    void set_window(int channel, int lo, int hi);
    std::pair<int, int> window(int channel) const;

    // eliminate all auxiliaries; result lives over out_space at its cap
    Poly extract();
    // single-channel plans only: the coefficients of t^e for e in [lo, hi]
    std::map<int, Poly> extract_table(int lo, int hi);

    // Master series relabeled onto plan variables, built only to the
    // degrees the pruning can keep (everything past a variable's
    // allowance dies in the extraction, so the raised cap is safe).
    Poly master_diff(int var_t, int var_y) const;  // x_t +_F chi(x_y)
    Poly master_sum(int var_t, int var_y) const;   // x_t +_F x_y
    Poly master_sum_z(int var_t, int var_y, int var_z) const;
    Poly master_two(int var_t) const;              // [2](x_t)
    Poly master_two_z(int var_t, int var_z) const; // [2](x_t) +_F z

    // largest useful degree of a plan variable beyond the mandatory t^n
    int allowance(int var) const;
    // joint degree bound for a factor spanning several plan variables:
    // one output budget plus each auxiliary's positive target headroom
    int joint_allowance(const std::vector<int>& vars) const;

private:
    struct Channel {
        int var = -1;
        int target = 0;
        int n_roots = 0;
        std::vector<Poly> roots;
        bool roots_vanish = true;
        std::optional<std::pair<int, int>> window;
    };

    Poly eliminate(const Poly& integrand, size_t channel, int target);
    Poly restrict_to_out(const Poly& p) const;
    bool prune_term(const Expo& e) const;
    Poly to_plan(const Poly& small2, const std::vector<int>& var_map) const;

    FormalGroupLaw law_;
    PolySpace out_space_;
    PolySpace plan_space_;
    std::vector<Channel> channels_;
    size_t active_channels_ = 0; // channels below this index still constrain pruning
    Poly integrand_;
};

// Gather the generators actually used and re-anchor the result on the
// smallest canonical ring containing them (never smaller than the law's).
Poly anchor_result(const Poly& wide, const FormalGroupLaw& law);

} // namespace cobord
