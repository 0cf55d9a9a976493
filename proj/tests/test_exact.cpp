#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "realforms/errors.hpp"
#include "realforms/matrix.hpp"
#include "realforms/witness.hpp"

using namespace realforms;

namespace {

GaussianRational gr(long rn, long rd, long in = 0, long id = 1) {
    return GaussianRational::of(rn, rd, in, id);
}

ExactMatrix m2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d) {
    ExactMatrix m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

std::mt19937_64 rng(20240);

GaussianRational random_gaussian() {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    return gr(num(rng), den(rng), num(rng), den(rng));
}

ExactMatrix random_invertible(int k) {
    for (;;) {
        ExactMatrix m(k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) m.at(r, c) = random_gaussian();
        if (m.invertible()) return m;
    }
}

}  // namespace

TEST_CASE("gaussian rational field identities, randomized and exact") {
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_gaussian(), b = random_gaussian(), c = random_gaussian();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
        if (!a.is_zero()) CHECK(b / a * a == b);
        CHECK(a.norm() == (a * a.conj()).re);
    }
    CHECK(gr(1, 3) + gr(1, 6) == gr(1, 2));
    CHECK_THROWS_AS(gr(1, 1) / GaussianRational(), DomainError);
}

TEST_CASE("matrix arithmetic and inverses") {
    auto id = ExactMatrix::identity(2);
    auto a = random_invertible(2);
    CHECK(a * a.inverse() == id);
    CHECK(a.inverse() * a == id);

    auto b3 = random_invertible(3);
    CHECK(b3 * b3.inverse() == ExactMatrix::identity(3));

    auto singular = m2(gr(1, 1), gr(2, 1), gr(2, 1), gr(4, 1));
    CHECK_FALSE(singular.invertible());
    CHECK_THROWS_AS(singular.inverse(), DomainError);

    // determinant is multiplicative (2x2 and 4x4 paths)
    for (int k : {2, 4}) {
        auto x = random_invertible(k);
        auto y = random_invertible(k);
        CHECK((x * y).determinant() == x.determinant() * y.determinant());
    }
}

TEST_CASE("involution properties on random invertible samples") {
    InvolutionSpec conj;
    InvolutionSpec by_j;
    by_j.mode = InvolutionSpec::Mode::ConjugateByJ;
    by_j.j = m2(gr(0, 1), gr(0, 1, 1, 1), gr(0, 1, 1, 1), gr(0, 1));  // (0 i / i 0), J conj(J) = 1
    by_j.validate(2);

    for (const InvolutionSpec& inv : {conj, by_j}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto m = random_invertible(2);
            auto n = random_invertible(2);
            CHECK(inv.apply(m * n) == inv.apply(m) * inv.apply(n));
            CHECK(inv.apply(inv.apply(m)) == m);
        }
    }

    InvolutionSpec bad;
    bad.mode = InvolutionSpec::Mode::ConjugateByJ;
    bad.j = m2(gr(2, 1), gr(0, 1), gr(0, 1), gr(1, 2));  // J conj(J) = diag(4, 1/4) != 1
    CHECK_THROWS_WITH_AS(bad.validate(2), doctest::Contains("involution"), DomainError);
}

TEST_CASE("cocycle checks from the torus normalizer picture") {
    InvolutionSpec conj;
    CHECK(is_cocycle(ExactMatrix::identity(2), conj));
    // (0 i / i 0)
    CHECK(is_cocycle(m2(gr(0, 1), gr(0, 1, 1, 1), gr(0, 1, 1, 1), gr(0, 1)), conj));
    // diag(1,-1)
    CHECK(is_cocycle(m2(gr(1, 1), gr(0, 1), gr(0, 1), gr(-1, 1)), conj));
    // diag(2, 1/2) is invertible but not a cocycle
    CHECK_FALSE(is_cocycle(m2(gr(2, 1), gr(0, 1), gr(0, 1), gr(1, 2)), conj));
    CHECK_THROWS_AS(is_cocycle(m2(gr(0, 1), gr(0, 1), gr(0, 1), gr(0, 1)), conj), DomainError);
}

TEST_CASE("connects: diagonal rescaling by conj(w)^2/|w|^2") {
    InvolutionSpec conj;
    auto g = m2(gr(0, 1, 1, 1), gr(0, 1), gr(0, 1), gr(0, 1, -1, 1));     // diag(i,-i)
    auto h = m2(gr(1, 1, 1, 1), gr(0, 1), gr(0, 1), gr(1, 2, -1, 2));     // diag(1+i, (1-i)/2)
    CHECK(connects(h, g, ExactMatrix::identity(2), conj));

    // antidiagonal h with unit entry maps diag(z, 1/z) to diag(1/z, z)
    auto weyl = m2(gr(0, 1), gr(1, 1), gr(-1, 1), gr(0, 1));
    auto target = m2(gr(0, 1, -1, 1), gr(0, 1), gr(0, 1), gr(0, 1, 1, 1));  // diag(-i, i)
    CHECK(connects(weyl, g, target, conj));

    // identity connects any cocycle to itself
    CHECK(connects(ExactMatrix::identity(2), g, g, conj));
    CHECK_FALSE(connects(h, g, g, conj));
}

TEST_CASE("connects is a groupoid: composition and inversion, randomized") {
    InvolutionSpec conj;
    for (int trial = 0; trial < 40; ++trial) {
        auto g = ExactMatrix::identity(2);
        auto h1 = random_invertible(2);
        auto h2 = random_invertible(2);
        // g1 = sigma(h1) g h1^-1 and g2 = sigma(h2) g1 h2^-1, by construction
        auto g1 = conj.apply(h1) * g * h1.inverse();
        auto g2 = conj.apply(h2) * g1 * h2.inverse();
        CHECK(connects(h1, g, g1, conj));
        CHECK(connects(h2, g1, g2, conj));
        CHECK(connects(h2 * h1, g, g2, conj));
        CHECK(connects(h1.inverse(), g1, g, conj));
    }
}

TEST_CASE("twisted stabilizer membership and closure") {
    InvolutionSpec conj;
    auto w = m2(gr(0, 1), gr(0, 1, 1, 1), gr(0, 1, 1, 1), gr(0, 1));  // (0 i / i 0)
    auto diag_i = m2(gr(0, 1, 1, 1), gr(0, 1), gr(0, 1), gr(0, 1, -1, 1));
    auto diag_2 = m2(gr(2, 1), gr(0, 1), gr(0, 1), gr(1, 2));
    auto circle = m2(gr(3, 5, 4, 5), gr(0, 1), gr(0, 1), gr(3, 5, -4, 5));

    CHECK(in_twisted_stabilizer(ExactMatrix::identity(2), w, conj));
    CHECK(in_twisted_stabilizer(diag_i, w, conj));
    CHECK(in_twisted_stabilizer(circle, w, conj));
    CHECK_FALSE(in_twisted_stabilizer(diag_2, w, conj));

    // closure under product and inverse on the sampled members
    for (const ExactMatrix& a : {diag_i, circle})
        for (const ExactMatrix& b : {diag_i, circle}) {
            CHECK(in_twisted_stabilizer(a * b, w, conj));
            CHECK(in_twisted_stabilizer(a.inverse(), w, conj));
        }
}

TEST_CASE("bundled witness suites all pass") {
    for (const std::string& id : bundled_case_ids()) {
        auto report = run_case(id);
        INFO("case ", id);
        for (const auto& a : report.assertions) {
            INFO(a.kind, ": ", a.description, " -- ", a.detail);
            CHECK(a.pass);
        }
        CHECK(report.all_pass());
        CHECK(report.failed() == 0);
    }
}

TEST_CASE("witness case ids and errors") {
    auto ids = bundled_case_ids();
    REQUIRE(ids.size() == 3);
    CHECK(std::find(ids.begin(), ids.end(), "normalizer-sl2") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "o11") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "orthogonal-diag") != ids.end());
    CHECK_THROWS_WITH_AS(run_case("no-such-case"), doctest::Contains("no bundled case"),
                         DomainError);
}

TEST_CASE("witness runner rejects malformed cases and reports failures honestly") {
    // an assertion that is genuinely false must come back pass = false
    std::string failing = R"({
      "id": "inline",
      "involution": {"mode": "conjugate"},
      "matrices": {"two": [[[2,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,2,0,1]]]},
      "assertions": [{"assert": "cocycle", "matrix": "two"}]
    })";
    auto r = run_case_text(failing);
    CHECK(r.failed() == 1);
    CHECK_FALSE(r.all_pass());

    std::string unknown_matrix = R"({
      "id": "inline",
      "involution": {"mode": "conjugate"},
      "matrices": {},
      "assertions": [{"assert": "cocycle", "matrix": "ghost"}]
    })";
    CHECK_THROWS_AS(run_case_text(unknown_matrix), DomainError);
}
