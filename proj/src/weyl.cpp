#include "cobord/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cobord/error.hpp"

namespace cobord {

SignedPerm SignedPerm::identity(int n)
{
    SignedPerm w;
    w.perm.resize(static_cast<size_t>(n));
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.signs.assign(static_cast<size_t>(n), false);
    return w;
}

bool SignedPerm::is_unsigned() const
{
    return std::none_of(signs.begin(), signs.end(), [](bool s) { return s; });
}

SignedPerm SignedPerm::operator*(const SignedPerm& b) const
{
    bug_check(n() == b.n(), "size mismatch");
    SignedPerm out;
    out.perm.resize(perm.size());
    out.signs.resize(perm.size());
    // (a*b)(y_i) = a(b(y_i)): b sends slot i to +-y_{b.perm[i]}, then a
    // relabels that variable.
    for (int i = 0; i < n(); ++i) {
        const int mid = b.perm[static_cast<size_t>(i)];
        out.perm[static_cast<size_t>(i)] = perm[static_cast<size_t>(mid)];
        out.signs[static_cast<size_t>(i)] =
            b.signs[static_cast<size_t>(i)] ^ signs[static_cast<size_t>(mid)];
    }
    return out;
}

std::vector<int> SignedPerm::one_line() const
{
    std::vector<int> v(perm.size());
    for (size_t i = 0; i < perm.size(); ++i)
        v[i] = signs[i] ? -(perm[i] + 1) : (perm[i] + 1);
    return v;
}

Parabolic Parabolic::s_blocks(std::vector<int> blocks)
{
    Parabolic p;
    p.kind = GroupKind::S;
    p.blocks = std::move(blocks);
    return p;
}

Parabolic Parabolic::c_fix(int q)
{
    Parabolic p;
    p.kind = GroupKind::C;
    p.q = q;
    p.q_symmetric = false;
    return p;
}

Parabolic Parabolic::sq_x_c(int q)
{
    Parabolic p;
    p.kind = GroupKind::C;
    p.q = q;
    p.q_symmetric = true;
    return p;
}

std::vector<SignedPerm> enumerate_group(int n, GroupKind kind)
{
    require(n >= 0, "negative rank");
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<SignedPerm> out;
    do {
        if (kind == GroupKind::S) {
            SignedPerm w;
            w.perm = base;
            w.signs.assign(static_cast<size_t>(n), false);
            out.push_back(std::move(w));
        } else {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                SignedPerm w;
                w.perm = base;
                w.signs.resize(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i)
                    w.signs[static_cast<size_t>(i)] = (mask >> i) & 1u;
                out.push_back(std::move(w));
            }
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

namespace {

// order on one-line signed notation: compare (|v|, sign) slot by slot,
// positives before negatives
bool one_line_less(const SignedPerm& a, const SignedPerm& b)
{
    for (int i = 0; i < a.n(); ++i) {
        const int pa = a.perm[static_cast<size_t>(i)], pb = b.perm[static_cast<size_t>(i)];
        const bool sa = a.signs[static_cast<size_t>(i)], sb = b.signs[static_cast<size_t>(i)];
        if (pa != pb)
            return pa < pb;
        if (sa != sb)
            return sb;
    }
    return false;
}

bool in_subgroup(const SignedPerm& h, int n, const Parabolic& sub)
{
    if (sub.kind == GroupKind::S) {
        if (!h.is_unsigned())
            return false;
        int lo = 0;
        for (int b : sub.blocks) {
            for (int i = lo; i < lo + b; ++i) {
                const int img = h.perm[static_cast<size_t>(i)];
                if (img < lo || img >= lo + b)
                    return false;
            }
            lo += b;
        }
        return lo == n;
    }
    // C-kind: slots 0..q-1 form either the identity or an unsigned S_q block;
    // slots q.. carry arbitrary signed images within themselves.
    for (int i = 0; i < sub.q; ++i) {
        const int img = h.perm[static_cast<size_t>(i)];
        if (h.signs[static_cast<size_t>(i)])
            return false;
        if (sub.q_symmetric) {
            if (img >= sub.q)
                return false;
        } else if (img != i) {
            return false;
        }
    }
    for (int i = sub.q; i < n; ++i)
        if (h.perm[static_cast<size_t>(i)] < sub.q)
            return false;
    return true;
}

} // namespace

std::vector<SignedPerm> enumerate_cosets(int n, GroupKind kind, const Parabolic& sub)
{
    if (sub.kind == GroupKind::S) {
        require(kind == GroupKind::S, "S-parabolic inside C is spelled sq_x_c");
        int total = 0;
        for (int b : sub.blocks) {
            require(b >= 1, "invalid composition");
            total += b;
        }
        require(total == n, "composition does not sum to n");
    } else {
        require(kind == GroupKind::C, "C-parabolic needs the C group");
        require(sub.q >= 0 && sub.q <= n, "invalid parabolic rank");
    }

    const std::vector<SignedPerm> group = enumerate_group(n, kind);
    std::vector<SignedPerm> subgroup;
    for (const auto& h : group)
        if (in_subgroup(h, n, sub))
            subgroup.push_back(h);

    std::vector<SignedPerm> reps;
    std::vector<bool> used(group.size(), false);
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < group.size(); ++i)
        index.emplace(group[i].one_line(), i);

    // group is generated in a deterministic order; scan it sorted by the
    // one-line order so every coset is keyed by its minimal element
    std::vector<size_t> order(group.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return one_line_less(group[a], group[b]); });

    for (size_t oi : order) {
        if (used[oi])
            continue;
        reps.push_back(group[oi]);
        for (const auto& h : subgroup) {
            const SignedPerm wh = group[oi] * h;
            auto it = index.find(wh.one_line());
            bug_check(it != index.end(), "coset element escaped the group");
            used[it->second] = true;
        }
    }
    bug_check(reps.size() * subgroup.size() == group.size(), "cosets do not partition the group");
    return reps;
}

namespace {

Poly act_impl(const SignedPerm& w, const Poly& p, const FormalGroupLaw* fgl)
{
    const int nv = p.vars()->count();
    require(w.n() <= nv, "permutation larger than variable list");
    if (!w.is_unsigned())
        require(fgl != nullptr, "signed action requires a formal group law");
    if (fgl)
        require(p.cap() == fgl->cap(), "cap mismatch");

    RingPtr ring = p.ring();
    Poly base = p;
    Poly chi;
    if (fgl) {
        ring = wider_ring(p.ring(), fgl->ring());
        if (!ring->same_as(*p.ring()))
            base = p.widened(ring);
        chi = fgl->inverse_series();
        if (!ring->same_as(*chi.ring()))
            chi = chi.widened(ring);
    }

    std::vector<Poly> bindings;
    bindings.reserve(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        const int target = i < w.n() ? w.perm[static_cast<size_t>(i)] : i;
        Poly img = Poly::variable(ring, base.vars(), base.cap(), target);
        if (i < w.n() && w.signs[static_cast<size_t>(i)])
            img = compose1(chi, img);
        bindings.push_back(std::move(img));
    }
    return base.substituted(bindings);
}

} // namespace

Poly act(const SignedPerm& w, const Poly& p)
{
    return act_impl(w, p, nullptr);
}

Poly act(const SignedPerm& w, const Poly& p, const FormalGroupLaw& fgl)
{
    return act_impl(w, p, &fgl);
}

} // namespace cobord
