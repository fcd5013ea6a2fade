#include "cobord/symfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cobord/error.hpp"
#include "cobord/weyl.hpp"

namespace cobord {

std::vector<IndexVec> partitions_in_box(int rows, int cols)
{
    std::vector<IndexVec> out;
    out.push_back({});
    IndexVec cur;
    std::function<void(int, int)> rec = [&](int row, int maxv) {
        if (row >= rows)
            return;
        for (int v = 1; v <= maxv; ++v) {
            cur.push_back(v);
            out.push_back(cur);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(0, cols);
    return out;
}

std::vector<IndexVec> monomials_up_to(int k, int d)
{
    std::vector<IndexVec> out;
    IndexVec cur(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(0, d);
    return out;
}

std::string index_to_string(const IndexVec& v)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

IndexVec index_from_string(const std::string& text)
{
    IndexVec out;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            out.push_back(std::stoi(cur));
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == '(' || ch == ')' || ch == ' ')
            continue;
        if (ch == ',') {
            flush();
            continue;
        }
        require((ch >= '0' && ch <= '9') || ch == '-', "bad index vector: " + text);
        cur += ch;
    }
    flush();
    return out;
}

namespace {

// all exponent assignments of total degree m over the selected variables,
// optionally with every exponent multiplied by `stride`
void add_monomials(Poly& acc, const PolySpace& sp, const std::vector<int>& var_idx, int m, int stride)
{
    if (m < 0)
        return;
    const size_t nv = static_cast<size_t>(sp.vars->count());
    Expo e(nv, 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (pos + 1 == var_idx.size()) {
            e[static_cast<size_t>(var_idx[pos])] = left * stride;
            if (expo_degree(e) <= sp.cap)
                acc = acc + Poly::monomial(sp.ring, sp.vars, sp.cap, e, Coeff::one(sp.ring));
            e[static_cast<size_t>(var_idx[pos])] = 0;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<size_t>(var_idx[pos])] = v * stride;
            rec(pos + 1, left - v);
        }
        e[static_cast<size_t>(var_idx[pos])] = 0;
    };
    if (var_idx.empty()) {
        if (m == 0)
            acc = acc + sp.one();
        return;
    }
    rec(0, m);
}

} // namespace

Poly complete_h(const PolySpace& sp, const std::vector<int>& var_idx, int m)
{
    Poly acc = sp.zero();
    if (m == 0)
        return sp.one();
    add_monomials(acc, sp, var_idx, m, 1);
    return acc;
}

Poly complete_h_squares(const PolySpace& sp, const std::vector<int>& var_idx, int m)
{
    Poly acc = sp.zero();
    if (m == 0)
        return sp.one();
    add_monomials(acc, sp, var_idx, m, 2);
    return acc;
}

Poly elementary_e(const PolySpace& sp, const std::vector<int>& var_idx, int i)
{
    const int n = static_cast<int>(var_idx.size());
    if (i < 0 || i > n)
        return sp.zero();
    if (i == 0)
        return sp.one();
    Poly acc = sp.zero();
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == i) {
            Expo e(static_cast<size_t>(sp.vars->count()), 0);
            for (int vi : pick)
                e[static_cast<size_t>(vi)] = 1;
            if (expo_degree(e) <= sp.cap)
                acc = acc + Poly::monomial(sp.ring, sp.vars, sp.cap, e, Coeff::one(sp.ring));
            return;
        }
        for (int j = from; j < n; ++j) {
            pick.push_back(var_idx[static_cast<size_t>(j)]);
            rec(j + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return acc;
}

Poly poly_det(const PolySpace& sp, const std::vector<std::vector<Poly>>& m)
{
    const int n = static_cast<int>(m.size());
    Poly acc = sp.zero();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<size_t>(i)] = i;
    do {
        int sgn = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)])
                    sgn = -sgn;
        Poly prod = sp.one();
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            const Poly& entry = m[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])];
            if (entry.is_zero())
                zero = true;
            else
                prod = prod * entry;
        }
        if (!zero)
            acc = sgn > 0 ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

namespace {

std::vector<int> first_vars(int n)
{
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = i;
    return v;
}

} // namespace

Poly schur_jt(const PolySpace& sp, const IndexVec& I, int n)
{
    require(nonzero_length(I) <= n, "index longer than variable count");
    const int q = static_cast<int>(I.size());
    if (q == 0)
        return sp.one();
    const int cap_int = std::max(sp.cap, weight(I));
    const PolySpace spi = sp.at(cap_int);
    std::vector<std::vector<Poly>> m(static_cast<size_t>(q), std::vector<Poly>());
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            m[static_cast<size_t>(i)].push_back(
                complete_h(spi, first_vars(n), I[static_cast<size_t>(i)] + j - i));
    return poly_det(spi, m).truncated(sp.cap);
}

Poly schur_bialternant(const PolySpace& sp, const IndexVec& lambda, int n)
{
    require(is_partition(lambda), "bialternant route needs a partition");
    require(nonzero_length(lambda) <= n, "partition longer than variable count");
    const IndexVec lam = padded(lambda, static_cast<size_t>(n));
    const int top = weight(lam) + n * (n - 1) / 2;
    const int cap_int = std::max(sp.cap, top);
    const PolySpace spi = sp.at(cap_int);

    Expo e(static_cast<size_t>(sp.vars->count()), 0);
    for (int i = 0; i < n; ++i)
        e[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (n - 1 - i);
    const Poly mono = Poly::monomial(spi.ring, spi.vars, spi.cap, e, Coeff::one(spi.ring));

    Poly alt = spi.zero();
    for (const auto& w : enumerate_group(n, GroupKind::S)) {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w.perm[static_cast<size_t>(i)] > w.perm[static_cast<size_t>(j)])
                    ++inv;
        const Poly img = act(w, mono);
        alt = (inv % 2 == 0) ? alt + img : alt - img;
    }

    Poly vand = spi.one();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vand = vand * (spi.var(i) - spi.var(j));
    if (alt.is_zero())
        return sp.zero();
    return alt.divided_exact(vand, spi.cap - n * (n - 1) / 2).truncated(sp.cap);
}

Poly grothendieck_svt(const PolySpace& sp, const IndexVec& lambda, int n)
{
    require(is_partition(lambda), "shape must be a partition");
    require(nonzero_length(lambda) <= n, "shape longer than entry range");
    const int beta_idx = sp.ring->generator_index("beta");
    require(beta_idx >= 0, "ring does not carry beta");
    const Coeff beta = Coeff::generator(sp.ring, beta_idx);

    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < nonzero_length(lambda); ++r)
        for (int c = 0; c < lambda[static_cast<size_t>(r)]; ++c)
            cells.push_back({r, c});
    if (cells.empty())
        return sp.one();

    const int size = static_cast<int>(cells.size());
    auto cell_index = [&](int r, int c) -> int {
        for (int i = 0; i < size; ++i)
            if (cells[static_cast<size_t>(i)].row == r && cells[static_cast<size_t>(i)].col == c)
                return i;
        return -1;
    };

    Poly acc = sp.zero();
    std::vector<unsigned> fill(static_cast<size_t>(size), 0);
    auto mask_min = [](unsigned m) { return __builtin_ctz(m) + 1; };
    auto mask_max = [](unsigned m) { return 31 - __builtin_clz(m) + 1; };

    std::function<void(int, int)> rec = [&](int idx, int extra) {
        if (idx == size) {
            Expo e(static_cast<size_t>(sp.vars->count()), 0);
            for (unsigned m : fill)
                for (int v = 0; v < n; ++v)
                    if ((m >> v) & 1u)
                        e[static_cast<size_t>(v)] += 1;
            if (expo_degree(e) > sp.cap)
                return;
            Coeff w = beta.pow(static_cast<unsigned>(extra)).scaled(extra % 2 ? Rat(-1) : Rat(1));
            acc = acc + Poly::monomial(sp.ring, sp.vars, sp.cap, e, w);
            return;
        }
        const auto [r, c] = cells[static_cast<size_t>(idx)];
        const int left = c > 0 ? cell_index(r, c - 1) : -1;
        const int up = r > 0 ? cell_index(r - 1, c) : -1;
        for (unsigned m = 1; m < (1u << n); ++m) {
            if (left >= 0 && mask_min(m) < mask_max(fill[static_cast<size_t>(left)]))
                continue; // rows weakly increase
            if (up >= 0 && mask_min(m) <= mask_max(fill[static_cast<size_t>(up)]))
                continue; // columns strictly increase
            fill[static_cast<size_t>(idx)] = m;
            rec(idx + 1, extra + __builtin_popcount(m) - 1);
        }
        fill[static_cast<size_t>(idx)] = 0;
    };
    rec(0, 0);
    return acc;
}

Poly quadratic_schur_det(const PolySpace& sp, const IndexVec& I, int n)
{
    const int q = static_cast<int>(I.size());
    if (q == 0)
        return sp.one();
    const int cap_int = std::max(sp.cap, weight(I));
    const PolySpace spi = sp.at(cap_int);
    auto segre = [&](int m) -> Poly {
        if (m < 0)
            return spi.zero();
        if (m % 2 == 1)
            return spi.zero();
        return complete_h_squares(spi, first_vars(n), m / 2);
    };
    std::vector<std::vector<Poly>> mat(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            mat[static_cast<size_t>(i)].push_back(segre(I[static_cast<size_t>(i)] + 2 * (j - i)));
    return poly_det(spi, mat).truncated(sp.cap);
}

} // namespace cobord
