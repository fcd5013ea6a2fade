#include "cobord/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cobord/error.hpp"

namespace cobord {

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names)
{
    std::set<std::string> seen;
    for (const auto& n : names)
        require(!n.empty() && seen.insert(n).second, "bad variable list");
    return std::shared_ptr<const VarSet>(new VarSet(std::move(names)));
}

int VarSet::index_of(const std::string& name) const
{
    for (int i = 0; i < count(); ++i)
        if (names_[static_cast<size_t>(i)] == name)
            return i;
    return -1;
}

bool expo_less(const Expo& a, const Expo& b)
{
    const int da = expo_degree(a), db = expo_degree(b);
    if (da != db)
        return da < db;
    return a > b; // lex descending within a degree
}

Poly::Poly(RingPtr ring, VarsPtr vars, int cap)
    : ring_(std::move(ring)), vars_(std::move(vars)), cap_(cap)
{
    require(ring_ && vars_, "null ring or variable set");
    require(cap_ >= 0, "negative cap");
}

Poly Poly::zero(RingPtr ring, VarsPtr vars, int cap)
{
    return Poly(std::move(ring), std::move(vars), cap);
}

Poly Poly::constant(RingPtr ring, VarsPtr vars, int cap, const Rat& value)
{
    Poly p(ring, std::move(vars), cap);
    if (value != 0)
        p.terms_.emplace_back(Expo(static_cast<size_t>(p.vars_->count()), 0), Coeff(ring, value));
    return p;
}

Poly Poly::constant(RingPtr ring, VarsPtr vars, int cap, const Coeff& value)
{
    Poly p(std::move(ring), std::move(vars), cap);
    if (!value.is_zero())
        p.terms_.emplace_back(Expo(static_cast<size_t>(p.vars_->count()), 0), value);
    return p;
}

Poly Poly::variable(RingPtr ring, VarsPtr vars, int cap, int var_index)
{
    Poly p(ring, vars, cap);
    require(var_index >= 0 && var_index < vars->count(), "variable index out of range");
    require(cap >= 1, "cap too small for a variable");
    Expo e(static_cast<size_t>(vars->count()), 0);
    e[static_cast<size_t>(var_index)] = 1;
    p.terms_.emplace_back(std::move(e), Coeff::one(ring));
    return p;
}

Poly Poly::monomial(RingPtr ring, VarsPtr vars, int cap, Expo e, Coeff c)
{
    Poly p(std::move(ring), vars, cap);
    require(static_cast<int>(e.size()) == vars->count(), "exponent arity mismatch");
    for (int x : e)
        require(x >= 0, "negative exponent");
    if (!c.is_zero() && expo_degree(e) <= cap)
        p.terms_.emplace_back(std::move(e), std::move(c));
    return p;
}

void Poly::check_binop(const Poly& a, const Poly& b)
{
    require(a.ring_ && b.ring_, "uninitialized polynomial");
    require(a.vars_->same_as(*b.vars_), "variable-list mismatch");
    require(a.cap_ == b.cap_, "cap mismatch");
    require(a.ring_->same_as(*b.ring_), "mixed-ring operands");
}

Poly Poly::operator+(const Poly& o) const
{
    check_binop(*this, o);
    Poly out(ring_, vars_, cap_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        if (expo_less(i->first, j->first))
            out.terms_.push_back(*i++);
        else if (expo_less(j->first, i->first))
            out.terms_.push_back(*j++);
        else {
            Coeff s = i->second + j->second;
            if (!s.is_zero())
                out.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), i, terms_.end());
    out.terms_.insert(out.terms_.end(), j, o.terms_.end());
    return out;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

Poly Poly::operator-(const Poly& o) const
{
    return *this + (-o);
}

Poly Poly::mul(const Poly& o, const Prune& prune) const
{
    check_binop(*this, o);
    Poly out(ring_, vars_, cap_);
    if (is_zero() || o.is_zero())
        return out;
    // accumulate into an ordered map, then flatten
    std::map<Expo, Coeff, decltype(&expo_less)> acc(&expo_less);
    const size_t nv = static_cast<size_t>(vars_->count());
    Expo e(nv, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            int deg = 0;
            for (size_t k = 0; k < nv; ++k) {
                e[k] = ea[k] + eb[k];
                deg += e[k];
            }
            if (deg > cap_ || (prune && prune(e)))
                continue;
            Coeff prod = ca * cb;
            if (prod.is_zero())
                continue;
            auto [it, fresh] = acc.try_emplace(e, prod);
            if (!fresh) {
                it->second = it->second + prod;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        }
    }
    out.terms_.assign(acc.begin(), acc.end());
    return out;
}

Poly Poly::operator*(const Poly& o) const
{
    return mul(o, nullptr);
}

bool Poly::operator==(const Poly& o) const
{
    check_binop(*this, o);
    return terms_ == o.terms_;
}

Poly Poly::scaled(const Rat& s) const
{
    if (s == 0)
        return Poly(ring_, vars_, cap_);
    Poly out = *this;
    for (auto& [e, c] : out.terms_)
        c = c.scaled(s);
    return out;
}

Poly Poly::scaled(const Coeff& c) const
{
    Poly out(ring_, vars_, cap_);
    if (c.is_zero())
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [e, tc] : terms_) {
        Coeff prod = tc * c;
        if (!prod.is_zero())
            out.terms_.emplace_back(e, std::move(prod));
    }
    return out;
}

Poly Poly::pow(unsigned e) const
{
    return pow(e, nullptr);
}

Poly Poly::pow(unsigned e, const Prune& prune) const
{
    Poly acc = Poly::constant(ring_, vars_, cap_, Rat(1));
    Poly b = *this;
    while (e) {
        if (e & 1u)
            acc = acc.mul(b, prune);
        e >>= 1u;
        if (e)
            b = b.mul(b, prune);
    }
    return acc;
}

int Poly::degree() const
{
    return terms_.empty() ? -1 : expo_degree(terms_.back().first);
}

int Poly::min_degree() const
{
    return terms_.empty() ? cap_ + 1 : expo_degree(terms_.front().first);
}

int Poly::degree_in(int var) const
{
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
}

Poly Poly::homogeneous_part(int d) const
{
    Poly out(ring_, vars_, cap_);
    for (const auto& [e, c] : terms_)
        if (expo_degree(e) == d)
            out.terms_.emplace_back(e, c);
    return out;
}

Poly Poly::truncated(int new_cap) const
{
    require(new_cap >= 0, "negative cap");
    Poly out(ring_, vars_, new_cap);
    for (const auto& [e, c] : terms_)
        if (expo_degree(e) <= new_cap)
            out.terms_.emplace_back(e, c);
    return out;
}

Poly Poly::with_cap(int new_cap) const
{
    require(new_cap >= cap_, "with_cap cannot lower precision");
    Poly out = *this;
    out.cap_ = new_cap;
    return out;
}

Poly Poly::widened(const RingPtr& ring) const
{
    Poly out = *this;
    out.ring_ = ring;
    for (auto& [e, c] : out.terms_)
        c = c.widened(ring);
    return out;
}

Poly Poly::rebased(const RingPtr& ring) const
{
    Poly out(ring, vars_, cap_);
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_back(e, c.rebased(ring));
    return out;
}

Poly Poly::mapped_coeffs(const RingPtr& target, const std::vector<Coeff>& images) const
{
    Poly out(target, vars_, cap_);
    for (const auto& [e, c] : terms_) {
        Coeff img = c.map_generators(target, images);
        if (!img.is_zero())
            out.terms_.emplace_back(e, std::move(img));
    }
    return out;
}

const Coeff* Poly::coeff_at(const Expo& e) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& t, const Expo& key) { return expo_less(t.first, key); });
    if (it != terms_.end() && it->first == e)
        return &it->second;
    return nullptr;
}

Coeff Poly::constant_term() const
{
    Expo zero(static_cast<size_t>(vars_->count()), 0);
    const Coeff* c = coeff_at(zero);
    return c ? *c : Coeff::zero(ring_);
}

std::map<int, Poly> Poly::collect(int var) const
{
    std::map<int, Poly> out;
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<size_t>(var)];
        auto it = out.find(k);
        if (it == out.end())
            it = out.emplace(k, Poly(ring_, vars_, cap_)).first;
        Expo rest = e;
        rest[static_cast<size_t>(var)] = 0;
        it->second.insert_sorted(std::move(rest), c);
    }
    return out;
}

Poly Poly::coefficient_of(int var, int k) const
{
    Poly out(ring_, vars_, cap_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(var)] != k)
            continue;
        Expo rest = e;
        rest[static_cast<size_t>(var)] = 0;
        out.insert_sorted(std::move(rest), c);
    }
    return out;
}

void Poly::insert_sorted(Expo e, Coeff c)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& t, const Expo& key) { return expo_less(t.first, key); });
    bug_check(it == terms_.end() || it->first != e, "duplicate term");
    terms_.insert(it, {std::move(e), std::move(c)});
}

Poly Poly::embedded(VarsPtr vars, const std::vector<int>& var_map) const
{
    require(static_cast<int>(var_map.size()) == vars_->count(), "variable map arity mismatch");
    Poly out(ring_, vars, cap_);
    const size_t nv = static_cast<size_t>(vars->count());
    for (const auto& [e, c] : terms_) {
        Expo big(nv, 0);
        for (size_t i = 0; i < e.size(); ++i) {
            const int j = var_map[i];
            require(j >= 0 && j < static_cast<int>(nv), "variable map out of range");
            big[static_cast<size_t>(j)] += e[i];
        }
        out.insert_sorted(std::move(big), c);
    }
    return out;
}

Poly Poly::substituted(const std::vector<Poly>& bindings) const
{
    require(static_cast<int>(bindings.size()) == vars_->count(), "binding arity mismatch");
    for (size_t i = 0; i < bindings.size(); ++i) {
        const Poly& b = bindings[i];
        require(b.cap() == cap_, "cap mismatch");
        require(b.ring()->same_as(*ring_), "mixed-ring operands");
        // a slot that is saturated up to the cap behaves as a series slot
        // and only accepts arguments without a constant term
        if (!b.constant_term().is_zero())
            require(degree_in(static_cast<int>(i)) < cap_,
                    "substitution of a series with a nonzero constant term into a series slot");
    }
    if (vars_->count() == 0 || is_zero()) {
        VarsPtr tv = bindings.empty() ? vars_ : bindings[0].vars();
        Poly out(ring_, tv, cap_);
        for (const auto& [e, c] : terms_)
            out.terms_.emplace_back(Expo(static_cast<size_t>(tv->count()), 0), c);
        return out;
    }
    const VarsPtr& tv = bindings[0].vars();
    for (const auto& b : bindings)
        require(b.vars()->same_as(*tv), "bindings over different variable sets");

    // Horner recursion over the last variable with a nonzero occurrence.
    std::function<Poly(const Poly&, int)> eval = [&](const Poly& p, int nvars) -> Poly {
        if (p.is_zero())
            return Poly(ring_, tv, cap_);
        int v = nvars - 1;
        while (v >= 0 && p.degree_in(v) == 0)
            --v;
        if (v < 0) {
            Poly out(ring_, tv, cap_);
            for (const auto& [e, c] : p.terms_)
                out.terms_.emplace_back(Expo(static_cast<size_t>(tv->count()), 0), c);
            return out;
        }
        std::map<int, Poly> parts = p.collect(v);
        const int top = parts.rbegin()->first;
        Poly acc(ring_, tv, cap_);
        for (int k = top; k >= 0; --k) {
            if (k != top)
                acc = acc * bindings[static_cast<size_t>(v)];
            auto it = parts.find(k);
            if (it != parts.end())
                acc = acc + eval(it->second, v);
        }
        return acc;
    };
    return eval(*this, vars_->count());
}

Poly Poly::inverted() const
{
    const Coeff c0 = constant_term();
    require(c0.is_scalar() && c0.scalar_value() != 0, "non-unit constant term");
    const Rat v0 = c0.scalar_value();
    if (ring_->base() == Base::integers)
        require(rat_is_unit(v0), "non-unit constant term");

    std::vector<Poly> p_parts, q_parts;
    p_parts.reserve(static_cast<size_t>(cap_) + 1);
    for (int d = 0; d <= cap_; ++d)
        p_parts.push_back(homogeneous_part(d));
    const Rat inv0 = Rat(1) / v0;
    Poly out = Poly::constant(ring_, vars_, cap_, inv0);
    q_parts.push_back(out);
    for (int d = 1; d <= cap_; ++d) {
        Poly acc(ring_, vars_, cap_);
        for (int k = 1; k <= d; ++k)
            if (!p_parts[static_cast<size_t>(k)].is_zero())
                acc = acc + p_parts[static_cast<size_t>(k)] * q_parts[static_cast<size_t>(d - k)];
        Poly qd = acc.scaled(-inv0);
        q_parts.push_back(qd);
        out = out + qd;
    }
    return out;
}

Poly divide_homogeneous(const Poly& num, const Poly& den)
{
    bug_check(!den.is_zero(), "division by zero");
    Poly quot(num.ring(), num.vars(), num.cap());
    if (num.is_zero())
        return quot;

    const auto& lead = den.terms().back(); // canonical max term
    std::map<Expo, Coeff, decltype(&expo_less)> rem(&expo_less);
    for (const auto& [e, c] : num.terms())
        rem.emplace(e, c);

    const size_t nv = static_cast<size_t>(num.vars()->count());
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        Expo q(nv, 0);
        bool divisible = true;
        for (size_t i = 0; i < nv; ++i) {
            q[i] = top->first[i] - lead.first[i];
            if (q[i] < 0) {
                divisible = false;
                break;
            }
        }
        bug_check(divisible, "exact division left a remainder");

        // quotient coefficient: top / lead.  The leading coefficient is a
        // scalar for every divisor used here (Weyl denominators).
        bug_check(lead.second.is_scalar(), "non-scalar leading coefficient");
        Coeff qc = top->second.scaled(Rat(1) / lead.second.scalar_value());
        quot = quot + Poly::monomial(num.ring(), num.vars(), num.cap(), q, qc);

        for (const auto& [e, c] : den.terms()) {
            Expo t(nv);
            for (size_t i = 0; i < nv; ++i)
                t[i] = e[i] + q[i];
            Coeff sub = c * qc;
            auto [it, fresh] = rem.try_emplace(t, -sub);
            if (!fresh) {
                it->second = it->second - sub;
                if (it->second.is_zero())
                    rem.erase(it);
            }
        }
    }
    return quot;
}

Poly Poly::divided_exact(const Poly& d) const
{
    const int ld = d.min_degree();
    require(ld <= d.cap(), "division by zero");
    return divided_exact(d, cap_ - ld);
}

Poly Poly::divided_exact(const Poly& d, int result_cap) const
{
    check_binop(*this, d);
    require(!d.is_zero(), "division by zero");
    require(result_cap >= 0, "cap exhausted by division");
    const int ld = d.min_degree();
    const int work_cap = std::max(cap_, result_cap);
    const Poly d0 = d.homogeneous_part(ld).with_cap(work_cap);

    // peel quotient levels against the lowest homogeneous part of d;
    // levels above this->cap - ld exist only for exact polynomial input
    std::vector<Poly> q_parts;
    Poly out(ring_, vars_, work_cap);
    for (int m = 0; m <= result_cap; ++m) {
        Poly r = homogeneous_part(ld + m).with_cap(work_cap);
        for (int j = 0; j < m; ++j) {
            const Poly dk = d.homogeneous_part(ld + m - j).with_cap(work_cap);
            if (!dk.is_zero() && !q_parts[static_cast<size_t>(j)].is_zero())
                r = r - q_parts[static_cast<size_t>(j)] * dk;
        }
        Poly qm = divide_homogeneous(r, d0);
        q_parts.push_back(qm);
        out = out + qm;
    }
    return out.truncated(result_cap);
}

bool Poly::is_graded_homogeneous(int grade) const
{
    for (const auto& [e, c] : terms_)
        if (!c.is_homogeneous_of_grade(grade - expo_degree(e)))
            return false;
    return true;
}

std::optional<int> Poly::graded_degree() const
{
    std::optional<int> g;
    for (const auto& [e, c] : terms_) {
        for (const auto& [gr, part] : c.grade_decomposition()) {
            const int total = expo_degree(e) + gr;
            if (!g)
                g = total;
            else if (*g != total)
                return std::nullopt;
        }
    }
    return g;
}

bool Poly::all_coeffs_integral() const
{
    for (const auto& [e, c] : terms_)
        if (!c.is_integral())
            return false;
    return true;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        const bool simple_neg = cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                                cs.find(" - ") == std::string::npos;
        if (first) {
            os << (simple_neg ? "-" : "");
        } else {
            os << (simple_neg ? " - " : " + ");
        }
        if (simple_neg)
            cs = cs.substr(1);
        first = false;

        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_->names()[i];
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        const bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (mono.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << mono;
        } else if (composite) {
            os << "(" << cs << ")*" << mono;
        } else {
            os << cs << "*" << mono;
        }
    }
    return os.str();
}

} // namespace cobord
