#pragma once

#include <map>

#include "cobord/laurent.hpp"
#include "cobord/partition.hpp"
#include "cobord/symmetrize.hpp"

namespace cobord {

// Chern-root data of the bundle a computation runs over.  Bundles never
// appear as objects: a context is a formal group law, base roots
// y_1..y_n, an optional twist class z (first Chern class of the values
// line bundle), and a flavor deciding whether the dual root set
// chi(y_i) +_F chi(z) is adjoined.
class ChernRoots {
public:
    enum class Kind { plain, symplectic, orthogonal };

    // roots y_1..y_n (type-A bundles)
    static ChernRoots plain(const FormalGroupLaw& law, int n, const std::string& stem = "y");
    // rank-2n symplectic bundle: roots y_i and chi(y_i) +_F chi(z)
    static ChernRoots symplectic(const FormalGroupLaw& law, int n, bool twisted);
    // rank-N orthogonal bundle, N = 2n+1 (odd adds the root y_{n+1}) or 2n
    static ChernRoots orthogonal(const FormalGroupLaw& law, int N, bool twisted);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int rank() const { return rank_; } // number of Chern roots of E-dual
    bool twisted() const { return twisted_; }
    int z_var() const { return z_var_; } // -1 when absent
    const FormalGroupLaw& law() const { return law_; }
    PolySpace space() const { return {law_.ring(), vars_, law_.cap()}; }

    // the full dual root list over sp (sp's variables start with ours)
    std::vector<Poly> root_series(const PolySpace& sp, const FormalGroupLaw& law_at) const;

private:
    explicit ChernRoots(FormalGroupLaw law) : law_(std::move(law)) {}

    Kind kind_ = Kind::plain;
    int n_ = 0;
    int rank_ = 0;
    bool twisted_ = false;
    int z_var_ = -1;
    FormalGroupLaw law_;
    VarsPtr vars_;
};

// ---- universal Schur functions ------------------------------------------

// s_I over the first n variables of out_space: the S_n-symmetrization of
// x^{I + rho_{n-1}} against prod_{i<j} (x_i +_F chi(x_j)).
Poly universal_schur(const FormalGroupLaw& law, const PolySpace& out_space, int n,
                     const IndexVec& I);
Poly universal_schur(const ChernRoots& ctx, const IndexVec& I);

// ---- Segre classes -------------------------------------------------------

struct SegreTable {
    std::map<int, Poly> values; // m -> S_m

    const Poly& at(int m) const;
};

SegreTable segre_table(const ChernRoots& ctx, int mlo, int mhi);

// Relative classes of E - F for bundles split into plain root variables.
SegreTable segre_relative(const ChernRoots& ctxE, const std::vector<int>& rootsF, int mlo,
                          int mhi);

// ---- one-row (new) universal Schur functions -----------------------------

// Segre-window route and the explicit double-sum closed form; the public
// entry computes both and insists they agree.
Poly new_universal_schur(const ChernRoots& ctx, int m);
Poly new_universal_schur_closed(const ChernRoots& ctx, int m);
Poly new_universal_schur_segre(const ChernRoots& ctx, int m);

// ---- universal quadratic Schur functions ---------------------------------

// Coset symmetrizer over C_n/C_{n-q} with the [2]-series and paired
// sum/difference factors (symplectic context, z = 0).
Poly quadratic_universal_schur(const ChernRoots& ctx, const IndexVec& I);

// Generating-function route: coefficient extraction against the doubled
// Segre factor and the cross factors.
Poly quadratic_via_gf(const ChernRoots& ctx, const IndexVec& lambda);

// K-theoretic determinantal route (multiplicative theory only).
Poly k_quadratic_det(const ChernRoots& ctx, const IndexVec& lambda);

} // namespace cobord
