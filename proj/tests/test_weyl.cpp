#include <doctest.h>

#include <map>

#include "cobord/weyl.hpp"

using namespace cobord;

TEST_CASE("coset counts")
{
    CHECK(enumerate_cosets(3, GroupKind::S, Parabolic::s_blocks({1, 2})).size() == 3);
    CHECK(enumerate_cosets(2, GroupKind::C, Parabolic::c_fix(1)).size() == 4);
    CHECK(enumerate_cosets(2, GroupKind::C, Parabolic::sq_x_c(2)).size() == 4);
    CHECK(enumerate_cosets(3, GroupKind::C, Parabolic::sq_x_c(1)).size() == 6);
    CHECK(enumerate_cosets(3, GroupKind::C, Parabolic::c_fix(1)).size() == 6);
    CHECK_THROWS_AS(enumerate_cosets(3, GroupKind::S, Parabolic::s_blocks({1, 1})), error);
}

TEST_CASE("cosets tile the group exactly once")
{
    for (GroupKind kind : {GroupKind::S, GroupKind::C}) {
        const int n = 3;
        const auto group = enumerate_group(n, kind);
        const auto sub = kind == GroupKind::S ? Parabolic::s_blocks({2, 1}) : Parabolic::c_fix(2);
        const auto reps = enumerate_cosets(n, kind, sub);

        std::map<std::vector<int>, int> hits;
        for (const auto& g : group)
            hits[g.one_line()] = 0;
        std::vector<SignedPerm> subgroup;
        for (const auto& h : group) {
            bool in = true;
            if (sub.kind == GroupKind::S) {
                for (int i = 0; i < n && in; ++i) {
                    const int img = h.perm[static_cast<size_t>(i)];
                    if (i < 2 ? img >= 2 : img < 2)
                        in = false;
                }
                in = in && h.is_unsigned();
            } else {
                for (int i = 0; i < 2 && in; ++i)
                    if (h.perm[static_cast<size_t>(i)] != i || h.signs[static_cast<size_t>(i)])
                        in = false;
            }
            if (in)
                subgroup.push_back(h);
        }
        for (const auto& w : reps)
            for (const auto& h : subgroup)
                hits[(w * h).one_line()] += 1;
        for (const auto& [k, v] : hits)
            CHECK(v == 1);
    }
}

TEST_CASE("actions on polynomials")
{
    const auto fm = FormalGroupLaw::make(Theory::multiplicative, 4);
    const PolySpace sp{fm.ring(), VarSet::make({"y1", "y2"}), 4};
    const Poly p = sp.var(0) * sp.var(0) * sp.var(1); // y1^2 y2

    SignedPerm swap;
    swap.perm = {1, 0};
    swap.signs = {false, false};
    CHECK(act(swap, p) == sp.var(0) * sp.var(1) * sp.var(1));

    SignedPerm flip1;
    flip1.perm = {0, 1};
    flip1.signs = {true, false};
    CHECK_THROWS_AS((void)act(flip1, p), error); // needs a law
    const auto fa = FormalGroupLaw::make(Theory::additive, 4);
    CHECK(act(flip1, sp.var(0).rebased(fa.ring()), fa) == -sp.var(0).rebased(fa.ring()));
    CHECK(act(flip1, sp.var(0), fm) == fm.formal_inverse(sp.var(0)));
}
