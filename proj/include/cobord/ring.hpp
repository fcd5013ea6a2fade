#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cobord/rat.hpp"

namespace cobord {

// Graded coefficient rings with named generators: Z, Z[beta], Z[b,c] and
// Q[m1,...,mD].  Generators carry an algebraic grade (beta, b: -1; c: -2;
// mk: -k); variables downstream carry grade +1.

enum class Base { integers, rationals };

struct GeneratorSpec {
    std::string name;
    int grade = 0;

    bool operator==(const GeneratorSpec&) const = default;
};

struct RingSpec {
    Base base = Base::integers;
    std::vector<GeneratorSpec> generators;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    // at most 24 generators (the packed monomial encoding below)
    static constexpr int max_generators = 24;

    static RingPtr make(RingSpec spec);

    // The four built-in coefficient rings.
    static RingPtr additive();                // Z
    static RingPtr multiplicative();          // Z[beta]
    static RingPtr hyperbolic();              // Z[b, c]
    static RingPtr universal(int generators); // Q[m1..mD]

    Base base() const { return spec_.base; }
    const std::vector<GeneratorSpec>& generators() const { return spec_.generators; }
    int generator_count() const { return static_cast<int>(spec_.generators.size()); }
    int generator_index(const std::string& name) const; // -1 when absent

    bool same_as(const Ring& other) const;
    // rings agree on a common prefix of generators (used to widen Q[m1..mD])
    bool prefix_compatible(const Ring& other) const;

    // This ring with base switched to the rationals (same generators).
    RingPtr rational_extension() const;
    bool is_universal_family() const; // generators are exactly m1..mD over Q

private:
    explicit Ring(RingSpec spec) : spec_(std::move(spec)) {}
    RingSpec spec_;
};

RingPtr wider_ring(const RingPtr& a, const RingPtr& b);

// A monomial in the ring generators, packed five bits per exponent (24
// generator slots, exponents below 32 -- ample for graded truncated data,
// overflow throws).  Comparison is a fixed total order.
struct GenMono {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool operator==(const GenMono&) const = default;
    auto operator<=>(const GenMono&) const = default;
    bool empty() const { return lo == 0 && hi == 0; }
};

GenMono mono_pack(const std::vector<std::pair<int, int>>& factors); // (index, exp>0)
std::vector<std::pair<int, int>> mono_unpack(const GenMono& m);
GenMono mono_mul(const GenMono& a, const GenMono& b);
int mono_grade(const Ring& ring, const GenMono& m);
int mono_max_index(const GenMono& m); // -1 for the empty monomial
std::string mono_to_string(const Ring& ring, const GenMono& m);

// An exact element of a graded coefficient ring, stored as a sparse sum of
// generator monomials with nonzero rational scalars.  Values are immutable
// in spirit: every operation returns a fresh coefficient.
class Coeff {
public:
    Coeff() = default;
    Coeff(RingPtr ring, const Rat& scalar);

    static Coeff zero(RingPtr ring) { return Coeff(std::move(ring), 0); }
    static Coeff one(RingPtr ring) { return Coeff(std::move(ring), 1); }
    static Coeff generator(RingPtr ring, int index, int exponent = 1);
    static Coeff from_terms(RingPtr ring, std::vector<std::pair<GenMono, Rat>> terms);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;           // no generator part
    Rat scalar_value() const;         // requires is_scalar()
    bool is_integral() const;         // every scalar has denominator 1

    const std::vector<std::pair<GenMono, Rat>>& terms() const { return terms_; }

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator-() const;
    Coeff scaled(const Rat& s) const;
    Coeff pow(unsigned e) const;
    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // {grade -> graded-homogeneous part}
    std::map<int, Coeff> grade_decomposition() const;
    bool is_homogeneous_of_grade(int g) const;
    int min_grade() const; // smallest term grade, 0 for zero

    // Apply a generator substitution (ring homomorphism); images live in
    // `target`.
    Coeff map_generators(const RingPtr& target, const std::vector<Coeff>& images) const;

    // Reinterpret over a wider prefix-compatible ring.
    Coeff widened(const RingPtr& wider) const;

    // Re-express over a ring sharing generator names (match by name; every
    // generator in use must exist in the target).
    Coeff rebased(const RingPtr& target) const;

    std::string to_string() const;

    friend Coeff checked_add(const Coeff& a, const Coeff& b);
    friend Coeff checked_mul(const Coeff& a, const Coeff& b);

private:
    RingPtr ring_;
    std::vector<std::pair<GenMono, Rat>> terms_; // sorted by monomial
};

// Public arithmetic with the mixed-ring guard (the operators above assume
// compatible operands and are used on hot paths).
Coeff checked_add(const Coeff& a, const Coeff& b);
Coeff checked_mul(const Coeff& a, const Coeff& b);

} // namespace cobord
