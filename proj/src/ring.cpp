#include "cobord/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cobord/error.hpp"

namespace cobord {

RingPtr Ring::make(RingSpec spec)
{
    require(static_cast<int>(spec.generators.size()) <= max_generators,
            "at most 24 ring generators are supported");
    std::set<std::string> seen;
    for (const auto& g : spec.generators) {
        require(!g.name.empty(), "generator name must be nonempty");
        require(seen.insert(g.name).second, "duplicate generator name: " + g.name);
    }
    return RingPtr(new Ring(std::move(spec)));
}

RingPtr Ring::additive()
{
    return make({Base::integers, {}});
}

RingPtr Ring::multiplicative()
{
    static const RingPtr r = make({Base::integers, {{"beta", -1}}});
    return r;
}

RingPtr Ring::hyperbolic()
{
    static const RingPtr r = make({Base::integers, {{"b", -1}, {"c", -2}}});
    return r;
}

RingPtr Ring::universal(int generators)
{
    require(generators >= 0, "negative generator count");
    RingSpec spec{Base::rationals, {}};
    spec.generators.reserve(static_cast<size_t>(generators));
    for (int k = 1; k <= generators; ++k)
        spec.generators.push_back({"m" + std::to_string(k), -k});
    return make(std::move(spec));
}

int Ring::generator_index(const std::string& name) const
{
    for (int i = 0; i < generator_count(); ++i)
        if (spec_.generators[static_cast<size_t>(i)].name == name)
            return i;
    return -1;
}

bool Ring::same_as(const Ring& other) const
{
    if (this == &other)
        return true;
    return spec_.base == other.spec_.base && spec_.generators == other.spec_.generators;
}

bool Ring::prefix_compatible(const Ring& other) const
{
    if (spec_.base != other.spec_.base)
        return false;
    const auto& a = spec_.generators;
    const auto& b = other.spec_.generators;
    const size_t k = std::min(a.size(), b.size());
    return std::equal(a.begin(), a.begin() + static_cast<long>(k), b.begin());
}

RingPtr Ring::rational_extension() const
{
    if (spec_.base == Base::rationals)
        return make(spec_);
    RingSpec s = spec_;
    s.base = Base::rationals;
    return make(std::move(s));
}

bool Ring::is_universal_family() const
{
    if (spec_.base != Base::rationals)
        return false;
    for (int i = 0; i < generator_count(); ++i) {
        const auto& g = spec_.generators[static_cast<size_t>(i)];
        if (g.name != "m" + std::to_string(i + 1) || g.grade != -(i + 1))
            return false;
    }
    return true;
}

RingPtr wider_ring(const RingPtr& a, const RingPtr& b)
{
    require(a && b, "null ring");
    require(a->prefix_compatible(*b), "mixed-ring operands");
    return a->generator_count() >= b->generator_count() ? a : b;
}

// ---- packed monomials ------------------------------------------------------

namespace {

constexpr std::uint64_t kFieldMask = 0x1f; // 5 bits per exponent
constexpr int kPerWord = 12;

inline int mono_get(const GenMono& m, int idx)
{
    const std::uint64_t w = idx < kPerWord ? m.lo : m.hi;
    const int shift = 5 * (idx < kPerWord ? idx : idx - kPerWord);
    return static_cast<int>((w >> shift) & kFieldMask);
}

inline void mono_set(GenMono& m, int idx, int exp)
{
    bug_check(exp >= 0 && exp <= 31, "monomial exponent out of range");
    std::uint64_t& w = idx < kPerWord ? m.lo : m.hi;
    const int shift = 5 * (idx < kPerWord ? idx : idx - kPerWord);
    w = (w & ~(kFieldMask << shift)) | (static_cast<std::uint64_t>(exp) << shift);
}

// carry detection for the fieldwise add (SWAR)
constexpr std::uint64_t field_top_bits()
{
    std::uint64_t v = 0;
    for (int i = 0; i < kPerWord; ++i)
        v |= (0x10ull << (5 * i));
    return v;
}
constexpr std::uint64_t kTopBits = field_top_bits();

inline std::uint64_t add_checked(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t s = a + b;
    // a carry out of a field's top bit would corrupt the field above it
    bug_check((((a & b) | ((a | b) & ~s)) & kTopBits) == 0, "monomial exponent overflow");
    return s;
}

} // namespace

GenMono mono_pack(const std::vector<std::pair<int, int>>& factors)
{
    GenMono m;
    for (auto [idx, exp] : factors) {
        require(idx >= 0 && idx < Ring::max_generators, "generator index out of range");
        require(exp > 0 && exp <= 31, "generator exponent out of range");
        bug_check(mono_get(m, idx) == 0, "duplicate generator in monomial");
        mono_set(m, idx, exp);
    }
    return m;
}

std::vector<std::pair<int, int>> mono_unpack(const GenMono& m)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < Ring::max_generators; ++i) {
        const int e = mono_get(m, i);
        if (e)
            out.emplace_back(i, e);
    }
    return out;
}

GenMono mono_mul(const GenMono& a, const GenMono& b)
{
    GenMono m;
    m.lo = add_checked(a.lo, b.lo);
    m.hi = add_checked(a.hi, b.hi);
    return m;
}

int mono_grade(const Ring& ring, const GenMono& m)
{
    int g = 0;
    for (int i = 0; i < ring.generator_count(); ++i) {
        const int e = mono_get(m, i);
        if (e)
            g += ring.generators()[static_cast<size_t>(i)].grade * e;
    }
    return g;
}

int mono_max_index(const GenMono& m)
{
    for (int i = Ring::max_generators - 1; i >= 0; --i)
        if (mono_get(m, i))
            return i;
    return -1;
}

std::string mono_to_string(const Ring& ring, const GenMono& m)
{
    // generator factors sorted by name, exponent appended with '^'
    std::vector<std::pair<std::string, int>> parts;
    for (auto [idx, exp] : mono_unpack(m))
        parts.emplace_back(ring.generators()[static_cast<size_t>(idx)].name, exp);
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, exp] : parts) {
        if (!first)
            os << "*";
        first = false;
        os << name;
        if (exp != 1)
            os << "^" << exp;
    }
    return os.str();
}

// ---- coefficients ----------------------------------------------------------

Coeff::Coeff(RingPtr ring, const Rat& scalar) : ring_(std::move(ring))
{
    require(ring_ != nullptr, "null ring");
    if (scalar != 0)
        terms_.emplace_back(GenMono{}, scalar);
}

Coeff Coeff::generator(RingPtr ring, int index, int exponent)
{
    require(ring != nullptr, "null ring");
    require(index >= 0 && index < ring->generator_count(), "generator index out of range");
    Coeff c;
    c.ring_ = std::move(ring);
    if (exponent != 0) {
        c.terms_.emplace_back(mono_pack({{index, exponent}}), Rat(1));
    } else {
        c.terms_.emplace_back(GenMono{}, Rat(1));
    }
    return c;
}

Coeff Coeff::from_terms(RingPtr ring, std::vector<std::pair<GenMono, Rat>> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Coeff c;
    c.ring_ = std::move(ring);
    c.terms_.reserve(terms.size());
    for (auto& [m, r] : terms) {
        if (!c.terms_.empty() && c.terms_.back().first == m) {
            c.terms_.back().second += r;
            if (c.terms_.back().second == 0)
                c.terms_.pop_back();
        } else if (r != 0) {
            c.terms_.emplace_back(m, std::move(r));
        }
    }
    return c;
}

bool Coeff::is_scalar() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
}

Rat Coeff::scalar_value() const
{
    if (terms_.empty())
        return Rat(0);
    bug_check(is_scalar(), "coefficient has generator part");
    return terms_[0].second;
}

bool Coeff::is_integral() const
{
    for (const auto& [m, r] : terms_)
        if (!rat_is_integer(r))
            return false;
    return true;
}

Coeff Coeff::operator+(const Coeff& o) const
{
    Coeff out;
    out.ring_ = ring_ ? ring_ : o.ring_;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        if (i->first < j->first)
            out.terms_.push_back(*i++);
        else if (j->first < i->first)
            out.terms_.push_back(*j++);
        else {
            Rat s = i->second + j->second;
            if (s != 0)
                out.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), i, terms_.end());
    out.terms_.insert(out.terms_.end(), j, o.terms_.end());
    return out;
}

Coeff Coeff::operator-() const
{
    Coeff out = *this;
    for (auto& [m, r] : out.terms_)
        r = -r;
    return out;
}

Coeff Coeff::operator-(const Coeff& o) const
{
    return *this + (-o);
}

Coeff Coeff::operator*(const Coeff& o) const
{
    Coeff out;
    out.ring_ = ring_ ? ring_ : o.ring_;
    if (is_zero() || o.is_zero())
        return out;
    if (o.terms_.size() == 1) {
        const auto& [mb, rb] = o.terms_[0];
        out.terms_.reserve(terms_.size());
        for (const auto& [ma, ra] : terms_)
            out.terms_.emplace_back(mono_mul(ma, mb), ra * rb);
        if (!mb.empty())
            std::sort(out.terms_.begin(), out.terms_.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    std::vector<std::pair<GenMono, Rat>> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ra] : terms_)
        for (const auto& [mb, rb] : o.terms_)
            prod.emplace_back(mono_mul(ma, mb), ra * rb);
    std::sort(prod.begin(), prod.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t i = 0; i < prod.size();) {
        GenMono key = prod[i].first;
        Rat sum = std::move(prod[i].second);
        for (++i; i < prod.size() && prod[i].first == key; ++i)
            sum += prod[i].second;
        if (sum != 0) {
            prod[w].first = key;
            prod[w].second = std::move(sum);
            ++w;
        }
    }
    prod.resize(w);
    out.terms_ = std::move(prod);
    return out;
}

Coeff Coeff::scaled(const Rat& s) const
{
    if (s == 0)
        return Coeff::zero(ring_);
    Coeff out = *this;
    for (auto& [m, r] : out.terms_)
        r *= s;
    return out;
}

Coeff Coeff::pow(unsigned e) const
{
    Coeff acc = Coeff::one(ring_);
    Coeff b = *this;
    while (e) {
        if (e & 1u)
            acc = acc * b;
        e >>= 1u;
        if (e)
            b = b * b;
    }
    return acc;
}

bool Coeff::operator==(const Coeff& o) const
{
    return terms_ == o.terms_;
}

std::map<int, Coeff> Coeff::grade_decomposition() const
{
    std::map<int, std::vector<std::pair<GenMono, Rat>>> buckets;
    for (const auto& [m, r] : terms_)
        buckets[mono_grade(*ring_, m)].emplace_back(m, r);
    std::map<int, Coeff> parts;
    for (auto& [g, terms] : buckets)
        parts.emplace(g, Coeff::from_terms(ring_, std::move(terms)));
    return parts;
}

bool Coeff::is_homogeneous_of_grade(int g) const
{
    for (const auto& [m, r] : terms_)
        if (mono_grade(*ring_, m) != g)
            return false;
    return true;
}

int Coeff::min_grade() const
{
    int g = 0;
    bool first = true;
    for (const auto& [m, r] : terms_) {
        const int mg = mono_grade(*ring_, m);
        if (first || mg < g)
            g = mg;
        first = false;
    }
    return g;
}

Coeff Coeff::map_generators(const RingPtr& target, const std::vector<Coeff>& images) const
{
    Coeff out = Coeff::zero(target);
    for (const auto& [m, r] : terms_) {
        Coeff img(target, r);
        for (auto [idx, exp] : mono_unpack(m)) {
            require(idx < static_cast<int>(images.size()), "no image for generator");
            img = img * images[static_cast<size_t>(idx)].pow(static_cast<unsigned>(exp));
        }
        out = out + img;
    }
    return out;
}

Coeff Coeff::widened(const RingPtr& wider) const
{
    require(ring_ && ring_->prefix_compatible(*wider) &&
                wider->generator_count() >= ring_->generator_count(),
            "ring is not a widening");
    Coeff out = *this;
    out.ring_ = wider;
    return out;
}

Coeff Coeff::rebased(const RingPtr& target) const
{
    require(target != nullptr, "null ring");
    std::vector<std::pair<GenMono, Rat>> terms;
    terms.reserve(terms_.size());
    for (const auto& [m, r] : terms_) {
        std::vector<std::pair<int, int>> factors;
        for (auto [idx, exp] : mono_unpack(m)) {
            const auto& g = ring_->generators()[static_cast<size_t>(idx)];
            const int tidx = target->generator_index(g.name);
            require(tidx >= 0, "coefficient uses generator absent from target ring: " + g.name);
            require(target->generators()[static_cast<size_t>(tidx)].grade == g.grade,
                    "generator grade mismatch: " + g.name);
            factors.emplace_back(tidx, exp);
        }
        terms.emplace_back(mono_pack(factors), r);
    }
    return Coeff::from_terms(target, std::move(terms));
}

std::string Coeff::to_string() const
{
    if (terms_.empty())
        return "0";
    // render sorted by generator grade structure: iterate as stored
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, r] : terms_) {
        const bool neg = r < 0;
        const Rat a = neg ? Rat(-r) : r;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (m.empty()) {
            os << rat_to_string(a);
        } else {
            if (a != 1)
                os << rat_to_string(a) << "*";
            os << mono_to_string(*ring_, m);
        }
    }
    return os.str();
}

Coeff checked_add(const Coeff& a, const Coeff& b)
{
    require(a.ring_ && b.ring_, "null ring");
    require(a.ring_->same_as(*b.ring_), "mixed-ring operands");
    return a + b;
}

Coeff checked_mul(const Coeff& a, const Coeff& b)
{
    require(a.ring_ && b.ring_, "null ring");
    require(a.ring_->same_as(*b.ring_), "mixed-ring operands");
    return a * b;
}

} // namespace cobord
