#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "realforms/action.hpp"
#include "realforms/errors.hpp"

using namespace realforms;

namespace {

FiniteGroupWithInvolution builtin(const std::string& shorthand) {
    return load_group(parse_builtin_shorthand(shorthand));
}

// G acting on the cosets of a subgroup, with the involution induced by sigma
// (needs sigma(H) = H).
EquivariantAction coset_action(const FiniteGroupWithInvolution& g, const Subgroup& h) {
    std::vector<int> coset_of(g.order, -1);
    std::vector<Elt> reps;
    for (Elt x = 0; x < g.order; ++x) {
        if (coset_of[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (Elt m : h.members) coset_of[g.mul(x, m)] = id;
    }
    EquivariantAction a;
    a.group = g;
    a.points = static_cast<int>(reps.size());
    a.act.assign(g.order, std::vector<int>(a.points));
    for (Elt p = 0; p < g.order; ++p)
        for (int i = 0; i < a.points; ++i) a.act[p][i] = coset_of[g.mul(p, reps[i])];
    a.sigma_x.resize(a.points);
    for (int i = 0; i < a.points; ++i) a.sigma_x[i] = coset_of[g.sg(reps[i])];
    validate_action(a);
    return a;
}

}  // namespace

TEST_CASE("point action reproduces h1 exactly") {
    for (const auto& name :
         {"builtin:cyclic:6:trivial", "builtin:cyclic:6:inversion", "builtin:cyclic:5:inversion",
          "builtin:dihedral:8", "builtin:quaternion:8", "builtin:symmetric:4"}) {
        auto g = builtin(name);
        auto report = fixed_point_groupoid(point_action(g));
        auto classes = h1(g);
        REQUIRE(report.component_count() == classes.count());
        for (int i = 0; i < report.component_count(); ++i) {
            CHECK(report.components[i].representative.first ==
                  classes.classes[i].representative);
            CHECK(report.components[i].automorphisms ==
                  classes.classes[i].stabilizer.members);
            CHECK(report.components[i].aut_histogram ==
                  classes.classes[i].stabilizer_histogram);
        }
        CHECK(report.mass == classes.mass);
    }
}

TEST_CASE("free swap action of C2") {
    auto c2 = builtin("builtin:cyclic:2:trivial");
    EquivariantAction a;
    a.group = c2;
    a.points = 2;
    a.act = {{0, 1}, {1, 0}};  // the nonidentity element swaps
    a.sigma_x = {0, 1};
    validate_action(a);
    auto report = fixed_point_groupoid(a);
    // only (1,a) and (1,b); the swap fails g.x = x
    REQUIRE(report.object_count() == 2);
    CHECK(report.objects[0] == GroupoidObject{0, 0});
    CHECK(report.objects[1] == GroupoidObject{0, 1});
    REQUIRE(report.component_count() == 1);
    CHECK(report.components[0].aut_order() == 1);
    CHECK(report.mass == Fraction::of(1, 1));
}

TEST_CASE("trivial action of C2 on a point gives two components with full stabilizer") {
    auto c2 = builtin("builtin:cyclic:2:trivial");
    auto report = fixed_point_groupoid(trivial_action(c2, 1));
    REQUIRE(report.component_count() == 2);
    for (const auto& comp : report.components) CHECK(comp.aut_order() == 2);
    CHECK(report.mass == Fraction::of(1, 1));
}

TEST_CASE("mass formula on assorted actions") {
    auto d8 = builtin("builtin:dihedral:8");
    for (const EquivariantAction& a :
         {regular_action(d8), trivial_action(d8, 3), coset_action(d8, center(d8)),
          point_action(d8)}) {
        auto r = fixed_point_groupoid(a);
        CHECK(r.mass == Fraction::of(r.object_count(), d8.order));
    }
}

TEST_CASE("regular action has one component with trivial automorphisms") {
    // [G \ G] is a point: one object class, trivial automorphisms
    for (const auto& name : {"builtin:cyclic:4:trivial", "builtin:cyclic:4:inversion",
                             "builtin:dihedral:8", "builtin:quaternion:8"}) {
        auto g = builtin(name);
        auto r = fixed_point_groupoid(regular_action(g));
        REQUIRE(r.component_count() == 1);
        CHECK(r.components[0].aut_order() == 1);
        // every point x carries exactly one object (sigma(x) x^-1, x)
        CHECK(r.object_count() == g.order);
    }
}

TEST_CASE("induced action sizes and validity") {
    auto d8 = builtin("builtin:dihedral:8");
    auto z = center(d8);

    // H = center, X = point: induced G-set of size 4
    auto hg = subgroup_as_group(d8, z);
    auto induced = induced_action(d8, z, point_action(hg));
    CHECK(induced.points == 4);

    // H = trivial, X = point: the regular G-set
    auto triv = trivial_subgroup(d8);
    auto tg = subgroup_as_group(d8, triv);
    auto reg = induced_action(d8, triv, point_action(tg));
    CHECK(reg.points == 8);

    // H = G, X arbitrary: same reports
    auto whole = whole_group(d8);
    auto self = induced_action(d8, whole, coset_action(d8, z));
    auto cmp = compare_groupoids(fixed_point_groupoid(self),
                                 fixed_point_groupoid(coset_action(d8, z)));
    CHECK(cmp.equivalent);
}

TEST_CASE("induction equivalence") {
    auto d8 = builtin("builtin:dihedral:8");
    auto q8 = builtin("builtin:quaternion:8");
    auto s4 = builtin("builtin:symmetric:4");
    auto c6i = builtin("builtin:cyclic:6:inversion");

    int instances = 0;
    auto check_induction = [&](const FiniteGroupWithInvolution& g, const Subgroup& h) {
        if (!is_sigma_stable(g, h)) return;
        auto hg = subgroup_as_group(g, h);
        for (const EquivariantAction& a :
             {point_action(hg), regular_action(hg), trivial_action(hg, 2)}) {
            auto direct = fixed_point_groupoid(a);
            auto induced = fixed_point_groupoid(induced_action(g, h, a));
            CHECK(compare_groupoids(direct, induced).equivalent);
            ++instances;
        }
    };

    check_induction(d8, center(d8));
    check_induction(d8, subgroup_closure(d8, {1}));      // rotations
    check_induction(d8, subgroup_closure(d8, {4}));      // a reflection
    check_induction(d8, subgroup_closure(d8, {2, 4}));   // Klein subgroup
    check_induction(q8, make_subgroup(q8, {0, 1}));
    check_induction(q8, subgroup_closure(q8, {2}));      // <i>
    check_induction(s4, subgroup_closure(s4, {1}));
    check_induction(c6i, make_subgroup(c6i, {0, 3}));
    check_induction(c6i, make_subgroup(c6i, {0, 2, 4}));
    CHECK(instances >= 20);
}

TEST_CASE("quotient action and quotient equivalence") {
    auto c4 = builtin("builtin:cyclic:4:trivial");
    auto n2 = make_subgroup(c4, {0, 2});

    auto reg = regular_action(c4);
    auto q = quotient_action(reg, n2);
    CHECK(q.group.order == 2);
    CHECK(q.points == 2);
    CHECK(compare_groupoids(fixed_point_groupoid(reg), fixed_point_groupoid(q)).equivalent);

    // N trivial: unchanged
    auto qt = quotient_action(reg, trivial_subgroup(c4));
    CHECK(qt.points == 4);
    CHECK(compare_groupoids(fixed_point_groupoid(reg), fixed_point_groupoid(qt)).equivalent);

    // N = G acting regularly: a point
    auto qg = quotient_action(reg, whole_group(c4));
    CHECK(qg.group.order == 1);
    CHECK(qg.points == 1);
    CHECK(compare_groupoids(fixed_point_groupoid(reg), fixed_point_groupoid(qg)).equivalent);

    // freeness is enforced
    CHECK_THROWS_WITH_AS(quotient_action(trivial_action(c4, 2), n2), doctest::Contains("fixes"),
                         DomainError);
}

TEST_CASE("quotient equivalence over generated instances") {
    int instances = 0;
    for (const auto& name : {"builtin:cyclic:4:trivial", "builtin:cyclic:4:inversion",
                             "builtin:cyclic:6:trivial", "builtin:cyclic:6:inversion",
                             "builtin:cyclic:8:inversion", "builtin:cyclic:12:trivial",
                             "builtin:dihedral:8", "builtin:quaternion:8"}) {
        auto g = builtin(name);
        auto reg = regular_action(g);
        // every sigma-stable normal subgroup acts freely on the regular G-set
        std::vector<Subgroup> normals;
        for (Elt x = 1; x < g.order; ++x) {
            auto h = subgroup_closure(g, {x});
            if (is_normal(g, h) && is_sigma_stable(g, h)) normals.push_back(h);
        }
        for (const auto& n : normals) {
            auto q = quotient_action(reg, n);
            CHECK(compare_groupoids(fixed_point_groupoid(reg), fixed_point_groupoid(q))
                      .equivalent);
            ++instances;
        }
    }
    CHECK(instances >= 20);
}

TEST_CASE("coset action matches induced picture for the center of dihedral 8") {
    // [H \ pt] vs [G \ (G/H)] for H = center
    auto d8 = builtin("builtin:dihedral:8");
    auto z = center(d8);
    auto hg = subgroup_as_group(d8, z);
    auto left = fixed_point_groupoid(point_action(hg));
    auto right = fixed_point_groupoid(coset_action(d8, z));
    CHECK(compare_groupoids(left, right).equivalent);
}

TEST_CASE("non-equivalent groupoids are detected") {
    auto c2 = builtin("builtin:cyclic:2:trivial");
    auto e = builtin("builtin:cyclic:1");
    auto r1 = fixed_point_groupoid(point_action(c2));  // two components
    auto r2 = fixed_point_groupoid(point_action(e));   // one component
    auto cmp = compare_groupoids(r1, r2);
    CHECK_FALSE(cmp.equivalent);

    // same counts but different automorphism data
    auto c3 = builtin("builtin:cyclic:3:inversion");
    auto r3 = fixed_point_groupoid(point_action(c3));  // one component, trivial Aut
    auto cmp2 = compare_groupoids(r2, r3);
    CHECK(cmp2.equivalent);  // both a single contractible component
    auto c5t = builtin("builtin:cyclic:5:trivial");
    auto r5 = fixed_point_groupoid(point_action(c5t));  // one component, Aut = C5
    CHECK_FALSE(compare_groupoids(r2, r5).equivalent);
}

TEST_CASE("relabeling points by an equivariant bijection preserves the report") {
    auto c6i = builtin("builtin:cyclic:6:inversion");
    auto reg = regular_action(c6i);
    // right multiplication by a sigma-fixed element commutes with the left
    // action and with sigmaX
    for (Elt t = 0; t < c6i.order; ++t) {
        if (c6i.sg(t) != t) continue;
        EquivariantAction relabeled = reg;
        std::vector<int> pi(c6i.order);
        for (int x = 0; x < c6i.order; ++x) pi[x] = c6i.mul(x, t);
        std::vector<int> pi_inv(c6i.order);
        for (int x = 0; x < c6i.order; ++x) pi_inv[pi[x]] = x;
        for (Elt p = 0; p < c6i.order; ++p)
            for (int x = 0; x < c6i.order; ++x)
                relabeled.act[p][pi[x]] = pi[reg.act[p][x]];
        for (int x = 0; x < c6i.order; ++x) relabeled.sigma_x[pi[x]] = pi[reg.sigma_x[x]];
        validate_action(relabeled);
        CHECK(compare_groupoids(fixed_point_groupoid(reg), fixed_point_groupoid(relabeled))
                  .equivalent);
    }
}

TEST_CASE("action validation catches incompatibilities") {
    auto c2 = builtin("builtin:cyclic:2:trivial");
    EquivariantAction bad;
    bad.group = c2;
    bad.points = 2;
    bad.act = {{0, 1}, {1, 0}};
    bad.sigma_x = {1, 0};  // swaps, but sigma on G is trivial and the action is free
    // compatibility sigmaX(g.x) = sigma(g).sigmaX(x) holds here: swap commutes
    validate_action(bad);  // actually fine

    EquivariantAction broken = bad;
    broken.act = {{0, 1}, {1, 1}};  // not an action: the generator is non-invertible
    CHECK_THROWS_AS(validate_action(broken), DomainError);
}
