#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ak/comb.hpp"

using namespace ak;

namespace {
MultiComp mc(const std::string& s) { return MultiComp::parse(s); }
}

TEST_CASE("dominance examples") {
    CHECK(dominates(mc("[[2],[]]"), mc("[[1],[1]]")));
    CHECK(!dominates(mc("[[1],[1]]"), mc("[[2],[]]")));
    for (auto& lam : enumerate_multipartitions(3, 2)) CHECK(dominates(lam, lam));
    CHECK_THROWS(dominates(mc("[[2],[]]"), mc("[[1],[]]")));
    CHECK_THROWS(dominates(mc("[[2]]"), mc("[[1],[1]]")));
}

TEST_CASE("dominance is a partial order") {
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 2; ++r) {
            auto all = enumerate_multipartitions(n, r);
            for (auto& a : all)
                for (auto& b : all) {
                    if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                    for (auto& c : all)
                        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
                }
        }
}

TEST_CASE("conjugation") {
    CHECK(mc("[[2],[1]]").conjugate() == mc("[[1],[1,1]]"));
    CHECK(MultiComp::omega(3, 2).conjugate() == mc("[[3],[]]"));
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_multipartitions(n, 2);
        for (auto& a : all) {
            CHECK(a.conjugate().conjugate() == a);
            for (auto& b : all)
                if (dominates(a, b)) CHECK(dominates(b.conjugate(), a.conjugate()));
        }
    }
}

TEST_CASE("enumeration order and saturation") {
    auto all = enumerate_multipartitions(2, 2);
    REQUIRE(all.size() == 5);
    CHECK(all[0] == mc("[[2],[]]"));
    CHECK(all[1] == mc("[[1,1],[]]"));
    CHECK(all[2] == mc("[[1],[1]]"));
    CHECK(all[3] == mc("[[],[2]]"));
    CHECK(all[4] == mc("[[],[1,1]]"));
    // the fixed order refines dominance, most dominant first
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            bool ok = !dominates(all[j], all[i]) || all[i] == all[j];
            CHECK(ok);
        }
    CHECK(enumerate_multipartitions(1, 1).size() == 1);

    auto sat = saturate({MultiComp::omega(2, 2)}, 2, 2);
    CHECK(sat == all);
}

TEST_CASE("standard tableaux") {
    CHECK(enumerate_std(mc("[[1],[1]]")).size() == 2);
    CHECK(enumerate_std(mc("[[3]]")).size() == 1);
    CHECK(enumerate_std(mc("[[2,1]]")).size() == 2);
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 2; ++r)
            for (auto& lam : enumerate_multipartitions(n, r)) {
                auto std_tabs = enumerate_std(lam);
                REQUIRE(!std_tabs.empty());
                CHECK(std_tabs.front() == t_row(lam));
                CHECK(std_tabs.back() == t_col(lam));
                for (auto& t : std_tabs) {
                    CHECK(tab_dominates(t_row(lam), t));
                    CHECK(tab_dominates(t, t_col(lam)));
                }
            }
}

TEST_CASE("d(t) reproduces the tableau") {
    for (auto& lam : enumerate_multipartitions(3, 2))
        for (auto& t : enumerate_std(lam)) {
            CHECK(act(t_row(lam), d_perm(t)) == t);
            CHECK(d_perm(t_row(lam)) == Perm::id(3));
        }
}

TEST_CASE("semistandard and column semistandard tableaux") {
    CHECK(enumerate_sstd(mc("[[2],[]]"), mc("[[1],[1]]")).size() == 1);
    CHECK(enumerate_cstd(mc("[[1],[1]]"), mc("[[1],[1]]")).size() == 1);
    for (int n = 2; n <= 3; ++n)
        for (int r = 1; r <= 2; ++r) {
            auto all = enumerate_multipartitions(n, r);
            for (auto& lam : all) {
                CHECK(enumerate_sstd(lam, lam).size() == 1);
                CHECK(enumerate_sstd(lam, lam)[0] == mu_map(t_row(lam), lam));
                // |SStd(lambda, omega)| = |Std(lambda)|
                CHECK(enumerate_sstd(lam, MultiComp::omega(n, r)).size() ==
                      enumerate_std(lam).size());
                for (auto& mu : all) {
                    if (!enumerate_sstd(lam, mu).empty()) CHECK(dominates(lam, mu));
                    if (!enumerate_cstd(lam, mu).empty())
                        CHECK(dominates(mu.conjugate(), lam));
                }
            }
        }
}

TEST_CASE("mu_map and preimages") {
    auto lam = mc("[[1],[1]]");
    auto tabs = enumerate_std(lam);
    // the tableau with 1 in component 2 gives a non-semistandard typed tableau
    bool found_bad = false;
    for (auto& t : tabs)
        if (t.rows[1][0][0] == 1 && !is_semistandard(mu_map(t, lam))) found_bad = true;
    CHECK(found_bad);
    for (auto& mu : enumerate_multipartitions(3, 2)) {
        CHECK(mu_map(t_row(mu), mu) == mu_map(t_row(mu), mu));  // deterministic
        CHECK(type_of(mu_map(t_row(mu), mu)) == mu);
    }
}

TEST_CASE("dot_first and ddot_last") {
    for (auto& lam : enumerate_multipartitions(3, 2)) {
        CHECK(dot_first(mu_map(t_row(lam), lam)) == t_row(lam));
        for (auto& mu : enumerate_multipartitions(3, 2))
            for (auto& S : enumerate_sstd(lam, mu)) {
                Tableau f = dot_first(S), l = ddot_last(S);
                CHECK(mu_map(f, mu) == S);
                CHECK(mu_map(l, mu) == S);
                CHECK(tab_dominates(f, l));
            }
    }
}

TEST_CASE("residues and Q_lambda") {
    auto lam = mc("[[2],[]]");
    auto t = t_row(lam);
    CHECK(residue(t, 2, 2) == Coeff::q_pow(2, 2) * Coeff::Q(2, 1));
    CHECK(Q_lambda(mc("[[1],[1]]"), 2) == Coeff::Q(2, 1) * Coeff::Q(2, 2));
    CHECK(Q_lambda(mc("[[2,1]]"), 1) == Coeff::one(1));
    // omega: Q_omega = (-1)^{n(r-1)} Q_1^n ... Q_{r-1}^n
    CHECK(Q_lambda(MultiComp::omega(2, 2), 2) == Coeff::Q(2, 1).pow(2));
}

TEST_CASE("w_lambda and the length-additive factorization") {
    CHECK(w_lambda(mc("[[2]]")) == Perm::transposition(2, 1));
    CHECK(w_lambda(MultiComp::omega(3, 2)) == Perm::id(3));
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 2; ++r)
            for (auto& lam : enumerate_multipartitions(n, r)) {
                Perm wl = w_lambda(lam);
                for (auto& t : enumerate_std(lam)) {
                    Perm dt = d_perm(t), dtc = d_perm(conj_tableau(t));
                    CHECK(dt * dtc.inverse() == wl);
                    CHECK(dt.length() + dtc.length() == wl.length());
                }
            }
}

TEST_CASE("serialization") {
    CHECK(mc("[[2,1],[1]]").str() == "[[2,1],[1]]");
    CHECK(mc("[ [ 2 , 1 ] , [ ] ]") == mc("[[2,1],[]]"));
    CHECK_THROWS(MultiComp::parse("nope"));
    for (auto& lam : enumerate_multipartitions(3, 3))
        CHECK(MultiComp::parse(lam.str()) == lam);
}
