#pragma once

#include <vector>

#include "cobord/fgl.hpp"

namespace cobord {

// Element of the hyperoctahedral group C_n = (Z/2)^n x| S_n acting on root
// variables; sign true on slot i means the formal inverse is applied there.
// S_n embeds as the all-false-signs subgroup.
struct SignedPerm {
    std::vector<int> perm;   // one-line: slot i -> perm[i] (0-based)
    std::vector<bool> signs; // per slot of the domain

    static SignedPerm identity(int n);
    int n() const { return static_cast<int>(perm.size()); }
    bool is_unsigned() const;

    // (a * b) acts as: first apply b's relabeling, then a's.
    SignedPerm operator*(const SignedPerm& b) const;
    bool operator==(const SignedPerm&) const = default;

    // one-line signed notation, e.g. (-2, 1, 3) with 1-based values
    std::vector<int> one_line() const;
};

enum class GroupKind { S, C };

// Parabolic subgroup descriptors:
//   S: a composition of n (block sizes), subgroup = S_b1 x S_b2 x ...
//   C: either C_{n-q} fixing the first q slots, or S_q x C_{n-q}.
struct Parabolic {
    static Parabolic s_blocks(std::vector<int> blocks);
    static Parabolic c_fix(int q);        // C_{n-q}
    static Parabolic sq_x_c(int q);       // S_q x C_{n-q}

    GroupKind kind = GroupKind::S;
    std::vector<int> blocks; // S only
    int q = 0;               // C only
    bool q_symmetric = false;
};

std::vector<SignedPerm> enumerate_group(int n, GroupKind kind);

// One representative per left coset w*H, smallest one-line signed notation
// first; the representative itself is the minimum of its coset.
std::vector<SignedPerm> enumerate_cosets(int n, GroupKind kind, const Parabolic& sub);

// Substitute variables of p (the first n variables of its space) along w;
// signed slots receive the formal inverse and require an FGL.
Poly act(const SignedPerm& w, const Poly& p);
Poly act(const SignedPerm& w, const Poly& p, const FormalGroupLaw& fgl);

} // namespace cobord
