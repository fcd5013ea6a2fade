#pragma once

#include <functional>

#include "cobord/weyl.hpp"

namespace cobord {

// One factor of a symmetrizer denominator, referring to root slots before
// the group acts:
//   Diff(i,j): y_i +_F chi(y_j)
//   Sum(i,j):  y_i +_F y_j
//   Two(i):    [2]_F(y_i)
enum class CoreKind { Diff, Sum, Two };

struct FactorRef {
    CoreKind kind;
    int i = 0;
    int j = 0;

    static FactorRef diff(int i, int j) { return {CoreKind::Diff, i, j}; }
    static FactorRef sum(int i, int j) { return {CoreKind::Sum, i, j}; }
    static FactorRef two(int i) { return {CoreKind::Two, i, 0}; }
};

// Evaluate  sum_w w.[ numerator / prod(factors) ]  over the given coset
// representatives.
//
// Every group image of a factor equals (core) or chi(core) for a core
// drawn from the finite family above with sorted indices; 1/chi(s) =
// W(s)/s for the cofactor series W(u) = u/chi(u).  Each summand is
// cleared to the full product of cores appearing anywhere, the cleared
// numerators are summed, and one exact division finishes the job -- a
// nonzero remainder would mean a bug and throws.
//
// The numerator callback must produce its value over the space it is
// handed (an internally elevated cap; the roots are the first n_slots
// variables).  The result lives over out_space at out_space.cap.
Poly symmetrize(const FormalGroupLaw& fgl, int n_slots, const PolySpace& out_space,
                const std::vector<SignedPerm>& reps,
                const std::function<Poly(const PolySpace&, const FormalGroupLaw&)>& numerator,
                const std::vector<FactorRef>& factors);

} // namespace cobord
