#pragma once

#include <utility>

#include "cobord/cobordism.hpp"

namespace cobord {

// Flag-bundle pushforward data: the type, the rank datum (type A: rank n;
// type C: rank 2n; types B/D: rank N = 2n+1 or 2n) and the strictly
// increasing dimension sequence q_1 < ... < q_m of the flag.
struct FlagSpec {
    enum class Type { A, C, BD };

    Type type = Type::A;
    int rank = 0;            // n (type A), 2n (type C) or N (types B/D)
    std::vector<int> q_seq;  // flag dimensions
    bool twisted = false;    // keep z symbolic (types C, B/D)

    int q() const { return q_seq.empty() ? 0 : q_seq.back(); }
    int n() const;           // base root count of the matching context
    void validate() const;
    bool full_flag() const;  // q_k = k for all k
};

// Bundle context matching a flag spec (plain / symplectic / orthogonal).
ChernRoots context_for(const FormalGroupLaw& law, const FlagSpec& spec);

// f must be a polynomial in the first q roots, invariant under the
// parabolic S_{q_1} x S_{q_2-q_1} x ... blocks of the flag.
void check_block_symmetric(const Poly& f, const std::vector<int>& q_seq);

// Pushforward along the projective bundle of lines: the coefficient of
// t^{n-1} in f(t) S(E-dual; 1/t).
Poly pushforward_projective(const ChernRoots& ctx, const Poly& f_one_var);

// Pushforward along a quadric bundle of isotropic lines: the coefficient
// of t^{N-1} in f(t) ([2](t) +_F z) S(E-dual; 1/t).
Poly pushforward_quadric(const ChernRoots& ctx, const Poly& f_one_var);

// The coefficient-extraction pushforward for a partial flag bundle.
Poly dp_pushforward(const FlagSpec& spec, const ChernRoots& ctx, const Poly& f);

// The same split in two: a reusable plan holding every f-independent
// factor, and the application of one input against it.
ExpansionPlan dp_plan(const FlagSpec& spec, const ChernRoots& ctx);
Poly dp_apply(const ExpansionPlan& plan, const FlagSpec& spec, const ChernRoots& ctx,
              const Poly& f);

// Symmetrizing-operator form, defined for type-A parabolic flags and for
// the type-C full-flag and Grassmann cases (z = 0).
Poly symmetrizer_gysin(const FlagSpec& spec, const ChernRoots& ctx, const Poly& f);

// Pushforward of s_I(U_q-dual) off the isotropic Grassmannian, computed by
// the symmetrizer route, paired with the quadratic Schur function of the
// shifted index; requires I_i > 2n - q - i + 1.
std::pair<Poly, Poly> pragacz_ratajski(const ChernRoots& ctx, const IndexVec& I, int q);

} // namespace cobord
