#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "realforms/errors.hpp"
#include "realforms/forms.hpp"

using namespace realforms;

TEST_CASE("classify_form basic invariants") {
    auto a = classify_form(1, 0);
    CHECK(a.disc_sign == 1);
    CHECK(a.hasse_sign == 1);

    auto b = classify_form(0, 2);
    CHECK(b.disc_sign == 1);
    CHECK(b.hasse_sign == -1);  // the single symbol (-1,-1) = -1

    auto c = classify_form(1, 1);
    CHECK(c.disc_sign == -1);
    CHECK(c.hasse_sign == 1);

    CHECK_THROWS_AS(classify_form(0, 0), DomainError);
    CHECK_THROWS_AS(classify_form(-1, 2), DomainError);
}

TEST_CASE("closed forms equal the pairwise product up to rank 64") {
    for (int n = 1; n <= 64; ++n)
        for (int p = 0; p <= n; ++p) {
            auto c = classify_form(p, n - p);
            CHECK(c.hasse_sign == hasse_by_pairwise_product(p, n - p));
            int disc = 1;
            for (int i = 0; i < n - p; ++i) disc = -disc;
            CHECK(c.disc_sign == disc);
        }
}

TEST_CASE("o_components") {
    auto r1 = o_components(1);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == SignatureClass{1, 0});
    CHECK(r1[1] == SignatureClass{0, 1});

    auto r2 = o_components(2);
    REQUIRE(r2.size() == 3);
    CHECK(r2[0] == SignatureClass{2, 0});
    CHECK(r2[1] == SignatureClass{1, 1});
    CHECK(r2[2] == SignatureClass{0, 2});

    CHECK(o_components(5).size() == 6);
    for (int n = 1; n <= 64; ++n) CHECK(o_components(n).size() == static_cast<size_t>(n) + 1);
}

TEST_CASE("so_components") {
    auto r11 = so_components(1, 1);
    REQUIRE(r11.size() == 1);
    CHECK(r11[0] == SignatureClass{1, 1});

    auto r20 = so_components(2, 0);
    REQUIRE(r20.size() == 2);
    CHECK(r20[0] == SignatureClass{2, 0});
    CHECK(r20[1] == SignatureClass{0, 2});

    auto r21 = so_components(2, 1);
    REQUIRE(r21.size() == 2);
    CHECK(r21[0] == SignatureClass{2, 1});
    CHECK(r21[1] == SignatureClass{0, 3});

    // containment, membership, shared discriminant
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= 6; ++q) {
            if (p + q < 1) continue;
            auto so = so_components(p, q);
            auto o = o_components(p + q);
            auto base = classify_form(p == 0 && q == 0 ? 1 : p, q);
            bool contains_self = false;
            for (const auto& c : so) {
                CHECK(std::find(o.begin(), o.end(), c) != o.end());
                CHECK(c.disc_sign == base.disc_sign);
                if (c == SignatureClass{p, q}) contains_self = true;
            }
            CHECK(contains_self);
        }
}

TEST_CASE("matching_signatures partitions the rank-n classes by sign pair") {
    for (int n = 1; n <= 20; ++n) {
        std::set<std::pair<int, int>> seen;
        size_t total = 0;
        for (int d : {1, -1})
            for (int h : {1, -1}) {
                auto m = matching_signatures(n, d, h);
                for (const auto& c : m) {
                    CHECK(c.disc_sign == d);
                    CHECK(c.hasse_sign == h);
                    CHECK(seen.insert({c.p, c.q}).second);  // disjoint
                }
                total += m.size();
            }
        CHECK(total == o_components(n).size());  // union is everything
    }

    auto m1 = matching_signatures(2, 1, 1);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] == SignatureClass{2, 0});
    auto m2 = matching_signatures(2, 1, -1);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == SignatureClass{0, 2});

    auto base = classify_form(2, 1);
    auto m3 = matching_signatures(3, base.disc_sign, base.hasse_sign);
    CHECK(std::find(m3.begin(), m3.end(), SignatureClass{2, 1}) != m3.end());
}

TEST_CASE("spin invariant ranks: pinned values for n = 1..8") {
    const int odd_expected[8] = {1, 1, 3, 4, 3, 3, 5, 6};
    const int even_expected[8] = {1, 1, 1, 5, 3, 3, 3, 7};
    for (int n = 1; n <= 8; ++n) {
        CHECK(spin_invariant_rank({SpinParity::Odd, n}) == odd_expected[n - 1]);
        CHECK(spin_invariant_rank({SpinParity::Even, n}) == even_expected[n - 1]);
    }
}

TEST_CASE("spin rank growth is exactly 2 per period") {
    for (int n = 1; n <= 100; ++n) {
        CHECK(spin_invariant_rank({SpinParity::Odd, n + 4}) -
                  spin_invariant_rank({SpinParity::Odd, n}) ==
              2);
        CHECK(spin_invariant_rank({SpinParity::Even, n + 4}) -
                  spin_invariant_rank({SpinParity::Even, n}) ==
              2);
    }
}

TEST_CASE("witt_rank dispatch") {
    CHECK(witt_rank("O", {3}) == 4);
    CHECK(witt_rank("SO", {2, 0}) == 2);
    CHECK(witt_rank("Spin-odd", {1}) == 1);
    CHECK(witt_rank("Spin-odd", {3}) == 3);
    CHECK(witt_rank("Spin-even", {4}) == 5);
    CHECK_THROWS_WITH_AS(witt_rank("SU", {2}), doctest::Contains("unknown"), DomainError);
    CHECK_THROWS_AS(witt_rank("O", {}), DomainError);
}
