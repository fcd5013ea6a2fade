#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cobord/ring.hpp"

namespace cobord {

// Variable list shared by the polynomials of one computation.
class VarSet {
public:
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }
    int count() const { return static_cast<int>(names_.size()); }
    int index_of(const std::string& name) const; // -1 when absent
    bool same_as(const VarSet& o) const { return names_ == o.names_; }

private:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VarSet>;

using Expo = std::vector<int>; // dense exponent vector over a VarSet

inline int expo_degree(const Expo& e)
{
    int d = 0;
    for (int x : e)
        d += x;
    return d;
}

// Canonical term order: total degree ascending, then lexicographically
// descending on the exponent vector (x1^2 before x1*x2 before x2^2).
bool expo_less(const Expo& a, const Expo& b);

// Truncated multivariate polynomial: every retained exponent vector has
// total degree <= cap, arithmetic re-truncates to cap.  Values are
// immutable; all operations are pure.
class Poly {
public:
    Poly() = default;
    Poly(RingPtr ring, VarsPtr vars, int cap);

    static Poly zero(RingPtr ring, VarsPtr vars, int cap);
    static Poly constant(RingPtr ring, VarsPtr vars, int cap, const Rat& value);
    static Poly constant(RingPtr ring, VarsPtr vars, int cap, const Coeff& value);
    static Poly variable(RingPtr ring, VarsPtr vars, int cap, int var_index);
    static Poly monomial(RingPtr ring, VarsPtr vars, int cap, Expo e, Coeff c);

    const RingPtr& ring() const { return ring_; }
    const VarsPtr& vars() const { return vars_; }
    int cap() const { return cap_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<std::pair<Expo, Coeff>>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    using Prune = std::function<bool(const Expo&)>; // true = drop this exponent
    Poly mul(const Poly& o, const Prune& prune) const;

    Poly scaled(const Rat& s) const;
    Poly scaled(const Coeff& c) const;
    Poly pow(unsigned e) const;
    Poly pow(unsigned e, const Prune& prune) const;

    // Degree bookkeeping.
    int degree() const;                    // max total degree, -1 for zero
    int min_degree() const;                // min total degree, cap+1 for zero
    int degree_in(int var) const;
    Poly homogeneous_part(int d) const;
    Poly truncated(int new_cap) const;     // lower or equal cap
    Poly with_cap(int new_cap) const;      // raise cap, terms unchanged
    Poly widened(const RingPtr& ring) const;
    Poly rebased(const RingPtr& ring) const; // re-express coefficients by generator name
    Poly mapped_coeffs(const RingPtr& target, const std::vector<Coeff>& images) const;

    const Coeff* coeff_at(const Expo& e) const; // nullptr when absent
    Coeff constant_term() const;

    // View as a polynomial in one variable: {exponent -> coefficient poly
    // with that variable struck out (exponent zero)}.
    std::map<int, Poly> collect(int var) const;
    Poly coefficient_of(int var, int k) const;

    // Move this polynomial into another variable set; var_map[i] gives the
    // index in `vars` of our i-th variable.
    Poly embedded(VarsPtr vars, const std::vector<int>& var_map) const;

    // Substitute bindings[i] for variable i (all bindings over one common
    // target space).  A binding must have zero constant term unless the
    // variable occurs to bounded degree (always true here: inputs are
    // truncated), matching composition of formal series.
    Poly substituted(const std::vector<Poly>& bindings) const;

    // Multiplicative inverse of a series with unit constant term.
    Poly inverted() const;

    // Exact division: returns q with q * d = *this on every retained level.
    // The divisor's lowest homogeneous part must divide exactly level by
    // level; a nonzero remainder throws internal_error.  The result cap is
    // cap - min_degree(d) unless a higher result_cap is requested by a
    // caller that knows the numerator is an exact polynomial.
    Poly divided_exact(const Poly& d) const;
    Poly divided_exact(const Poly& d, int result_cap) const;

    // Grading: variable degree + coefficient grade constant across terms.
    bool is_graded_homogeneous(int grade) const;
    std::optional<int> graded_degree() const;

    bool all_coeffs_integral() const;

    std::string to_string() const;

private:
    void insert_sorted(Expo e, Coeff c);
    static void check_binop(const Poly& a, const Poly& b);

    RingPtr ring_;
    VarsPtr vars_;
    int cap_ = 0;
    std::vector<std::pair<Expo, Coeff>> terms_; // canonical order, nonzero coeffs
};

// Exact division of homogeneous `num` by homogeneous `den` under the
// canonical term order; throws internal_error when a remainder survives.
Poly divide_homogeneous(const Poly& num, const Poly& den);

// The (ring, variables, cap) triple shared by the polynomials of one
// computation.
struct PolySpace {
    RingPtr ring;
    VarsPtr vars;
    int cap = 0;

    Poly zero() const { return Poly::zero(ring, vars, cap); }
    Poly one() const { return Poly::constant(ring, vars, cap, Rat(1)); }
    Poly var(int i) const { return Poly::variable(ring, vars, cap, i); }
    PolySpace at(int new_cap) const { return {ring, vars, new_cap}; }
};

} // namespace cobord
