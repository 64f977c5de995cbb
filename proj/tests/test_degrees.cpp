#include <catch2/catch_amalgamated.hpp>

#include "oracle_helpers.hpp"
#include "secant/degrees.hpp"

using namespace secant;

TEST_CASE("binomial against the Pascal oracle", "[degrees][property]") {
    for (int n = 0; n <= 45; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k).str() == oracle::pascal_binomial(n, k).str());
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("min_degree_bound", "[degrees]") {
    CHECK(min_degree_bound(5, 2) == 4);
    CHECK(min_degree_bound(3, 2) == 2);  // hypersurface case
    CHECK(min_degree_bound(8, 2) == 7);  // met by S(3,4)
    CHECK_THROWS_AS(min_degree_bound(2, 2), std::invalid_argument);
}

TEST_CASE("secant degree lower bound", "[degrees]") {
    CHECK(secant_degree_lower_bound(1, 1) == 3); // chordal cubic of the Veronese surface
    CHECK(secant_degree_lower_bound(4, 0) == 5); // reduces to codim+1
    CHECK(secant_degree_lower_bound(1, 4) == 6); // hypersurface S^4(V_{2,4})
    CHECK_THROWS_AS(secant_degree_lower_bound(0, 1), std::invalid_argument);
}

TEST_CASE("k=0 degeneration matches the classical bound", "[degrees][property]") {
    for (long long n = 1; n <= 6; ++n)
        for (long long r = n + 1; r <= n + 10; ++r)
            CHECK(secant_degree_lower_bound(r - n, 0) == min_degree_bound(r, n));
}

TEST_CASE("multiplicity bound", "[degrees]") {
    CHECK(secant_multiplicity_lower_bound(3, 2, 2) == 1); // l = k: smooth general point
    CHECK(secant_multiplicity_lower_bound(1, 1, 0) == 2); // double points along V_{2,2}
    CHECK_THROWS_AS(secant_multiplicity_lower_bound(1, 1, 2), std::invalid_argument);
}

TEST_CASE("Pascal recursion mirrors the induction step", "[degrees][property]") {
    for (long long h = 1; h <= 20; ++h)
        for (long long k = 1; k <= 20; ++k)
            CHECK(binomial(h + k + 1, k + 1) == binomial(h + k, k + 1) + binomial(h + k, k));
}

TEST_CASE("scroll secant degree", "[degrees]") {
    CHECK(scroll_secant_degree(ScrollType{3, 4}, 1) == 10);
    CHECK(scroll_secant_degree(ScrollType{2, 3}, 1) == 3);
    CHECK_THROWS_AS(scroll_secant_degree(ScrollType{2, 2}, 2), FillsSignal);
    CHECK(scroll_secant_fills(ScrollType{2, 2}, 2));
}

TEST_CASE("scrolls achieve the degree bound across the grid", "[degrees][property]") {
    for (int a1 = 1; a1 <= 6; ++a1)
        for (int a2 = a1; a2 <= 8; ++a2)
            for (int k = 1; k <= std::min(a1, 5); ++k) {
                ScrollType a{a1, a2};
                if (scroll_secant_fills(a, k)) continue;
                long long h = scroll_correction(a, k) - k - 1;
                if (h < 1) continue;
                CHECK(scroll_secant_degree(a, k) == secant_degree_lower_bound(h, k));
            }
}

TEST_CASE("segre top secant degree", "[degrees]") {
    CHECK(segre_top_secant_degree(1, 2) == 3);
    CHECK(segre_top_secant_degree(1, 1) == 2);
    CHECK(segre_top_secant_degree(2, 4) == 10);
    CHECK_THROWS_AS(segre_top_secant_degree(3, 2), std::invalid_argument);
}

TEST_CASE("segre degree equals the bound at its codimension", "[degrees][property]") {
    // codim S^{m1-1}(Seg(m1,m2)) = (m1-k)(m2-k) at k = m1-1, i.e. m2-m1+1.
    // The two closed forms must agree as an executable identity.
    for (int m1 = 1; m1 <= 12; ++m1)
        for (int m2 = m1; m2 <= 12; ++m2) {
            long long h = m2 - m1 + 1;
            CHECK(segre_top_secant_degree(m1, m2) == secant_degree_lower_bound(h, m1 - 1));
        }
}

TEST_CASE("nu from mu", "[degrees]") {
    CHECK(nu_from_mu(1, 6) == 6);
    CHECK(nu_from_mu(BigInt(1), scroll_secant_degree(ScrollType{3, 4}, 1)) == 10);
    // when S^k fills, deg = 1 and nu = mu
    CHECK(nu_from_mu(3, 1) == 3);
    CHECK_THROWS_AS(nu_from_mu(0, 5), std::invalid_argument);
}

TEST_CASE("bound reports", "[degrees]") {
    BoundReport rep = make_bound_report(1, 4, BigInt(6), "symmetric determinantal sextic");
    CHECK(rep.lower_bound == 6);
    REQUIRE(rep.is_minimal.has_value());
    CHECK(*rep.is_minimal);
    CHECK_THROWS_AS(make_bound_report(2, 1, BigInt(3), "impossible"), std::invalid_argument);
    BoundReport bare = make_bound_report(3, 2);
    CHECK(!bare.is_minimal.has_value());
    CHECK(bare.lower_bound == binomial(6, 3));
}
