#include "realforms/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

void validate_action(const EquivariantAction& a) {
    const FiniteGroupWithInvolution& g = a.group;
    validate_group(g);
    if (a.points <= 0) fail("NotAGroup", "action needs at least one point");
    if (static_cast<int>(a.act.size()) != g.order) fail("NotAGroup", "action table wrong height");
    for (const auto& row : a.act) {
        if (static_cast<int>(row.size()) != a.points) fail("NotAGroup", "action table wrong width");
        for (int x : row)
            if (x < 0 || x >= a.points) fail("NotAGroup", "action image out of range");
    }
    if (static_cast<int>(a.sigma_x.size()) != a.points) fail("NotAGroup", "sigmaX wrong length");
    for (int x : a.sigma_x)
        if (x < 0 || x >= a.points) fail("NotAGroup", "sigmaX image out of range");
    for (int x = 0; x < a.points; ++x) {
        if (a.act[0][x] != x) fail("NotAGroup", "identity must act trivially");
        if (a.sigma_x[a.sigma_x[x]] != x) fail("NotAnInvolution", "sigmaX^2 != id");
    }
    for (Elt p = 0; p < g.order; ++p)
        for (Elt q = 0; q < g.order; ++q)
            for (int x = 0; x < a.points; ++x)
                if (a.act[p][a.act[q][x]] != a.act[g.mul(p, q)][x])
                    fail("NotAGroup", "action is not associative");
    for (Elt p = 0; p < g.order; ++p)
        for (int x = 0; x < a.points; ++x)
            if (a.sigma_x[a.act[p][x]] != a.act[g.sg(p)][a.sigma_x[x]])
                fail("NotAnAutomorphism", "sigmaX is not compatible with the group involution");
}

FixedPointGroupoidReport fixed_point_groupoid(const EquivariantAction& a, long long pair_cap) {
    const FiniteGroupWithInvolution& g = a.group;
    if (static_cast<long long>(g.order) * a.points > pair_cap)
        fail("OrderCapExceeded", "object scan exceeds the pair cap");

    FixedPointGroupoidReport report;
    report.group_order = g.order;
    for (Elt x = 0; x < g.order; ++x) {
        if (g.mul(x, g.sg(x)) != 0) continue;
        for (int p = 0; p < a.points; ++p)
            if (a.apply(x, p) == a.sigma_x[p]) report.objects.push_back({x, p});
    }
    std::set<GroupoidObject> remaining(report.objects.begin(), report.objects.end());
    Fraction mass{0, 1};
    while (!remaining.empty()) {
        GroupoidObject rep = *remaining.begin();
        std::set<GroupoidObject> orbit;
        for (Elt h = 0; h < g.order; ++h) {
            Elt gg = g.mul(g.mul(g.sg(h), rep.first), g.inv(h));
            orbit.insert({gg, a.apply(h, rep.second)});
        }
        GroupoidComponent comp;
        comp.representative = rep;
        comp.objects.assign(orbit.begin(), orbit.end());
        for (Elt h = 0; h < g.order; ++h) {
            bool fixes_g = g.mul(g.sg(h), rep.first) == g.mul(rep.first, h);
            bool fixes_x = a.apply(h, rep.second) == rep.second;
            if (fixes_g && fixes_x) comp.automorphisms.push_back(h);
        }
        for (Elt h : comp.automorphisms) ++comp.aut_histogram[g.element_order(h)];
        for (const GroupoidObject& o : comp.objects) remaining.erase(o);
        mass = mass.plus(Fraction::of(1, comp.aut_order()));
        report.components.push_back(std::move(comp));
    }
    report.mass = mass;
    return report;
}

EquivariantAction point_action(const FiniteGroupWithInvolution& g) {
    EquivariantAction a;
    a.group = g;
    a.points = 1;
    a.act.assign(g.order, std::vector<int>(1, 0));
    a.sigma_x = {0};
    return a;
}

EquivariantAction regular_action(const FiniteGroupWithInvolution& g) {
    EquivariantAction a;
    a.group = g;
    a.points = g.order;
    a.act = g.table;
    a.sigma_x = g.sigma;
    return a;
}

EquivariantAction trivial_action(const FiniteGroupWithInvolution& g, int k) {
    EquivariantAction a;
    a.group = g;
    a.points = k;
    a.act.assign(g.order, std::vector<int>(k));
    for (auto& row : a.act) std::iota(row.begin(), row.end(), 0);
    a.sigma_x.resize(k);
    std::iota(a.sigma_x.begin(), a.sigma_x.end(), 0);
    return a;
}

EquivariantAction induced_action(const FiniteGroupWithInvolution& g, const Subgroup& h,
                                 const EquivariantAction& a) {
    if (!is_subgroup(g, h.members)) fail("NotASubgroup", "member set is not a subgroup");
    if (!is_sigma_stable(g, h)) fail("NotSigmaStable", "subgroup is not sigma-stable");
    FiniteGroupWithInvolution hg = subgroup_as_group(g, h);
    if (a.group.table != hg.table || a.group.sigma != hg.sigma)
        fail("NotASubgroup", "the action's group is not the given subgroup of the parent");

    int m = h.order();
    // class of (g0, x): { (g0 * h^-1, h.x) : h in H }; canonical member is lex-least
    auto canonical = [&](Elt g0, int x) {
        std::pair<Elt, int> best{g.order, a.points};
        for (int i = 0; i < m; ++i) {
            Elt hh = h.members[i];
            std::pair<Elt, int> cand{g.mul(g0, g.inv(hh)), a.apply(i, x)};
            best = std::min(best, cand);
        }
        return best;
    };

    std::map<std::pair<Elt, int>, int> index;
    std::vector<std::pair<Elt, int>> reps;
    for (Elt g0 = 0; g0 < g.order; ++g0)
        for (int x = 0; x < a.points; ++x) {
            auto key = canonical(g0, x);
            if (!index.count(key)) {
                index[key] = static_cast<int>(reps.size());
                reps.push_back(key);
            }
        }
    long long expected = static_cast<long long>(g.order) * a.points / m;
    if (static_cast<long long>(reps.size()) != expected)
        fail("NotASubgroup", "induced point count mismatch: internal error");

    EquivariantAction out;
    out.group = g;
    out.points = static_cast<int>(reps.size());
    out.act.assign(g.order, std::vector<int>(out.points));
    for (Elt p = 0; p < g.order; ++p)
        for (int i = 0; i < out.points; ++i)
            out.act[p][i] = index.at(canonical(g.mul(p, reps[i].first), reps[i].second));
    out.sigma_x.resize(out.points);
    for (int i = 0; i < out.points; ++i)
        out.sigma_x[i] = index.at(canonical(g.sg(reps[i].first), a.sigma_x[reps[i].second]));
    validate_action(out);
    return out;
}

EquivariantAction quotient_action(const EquivariantAction& a, const Subgroup& n) {
    const FiniteGroupWithInvolution& g = a.group;
    if (!is_subgroup(g, n.members)) fail("NotASubgroup", "member set is not a subgroup");
    if (!is_normal(g, n)) fail("NotNormal", "subgroup is not normal");
    if (!is_sigma_stable(g, n)) fail("NotSigmaStable", "subgroup is not sigma-stable");
    for (Elt m : n.members) {
        if (m == 0) continue;
        for (int x = 0; x < a.points; ++x)
            if (a.apply(m, x) == x)
                fail("NotFree", "subgroup element " + g.label(m) + " fixes point " +
                                    std::to_string(x));
    }

    QuotientResult q = quotient(g, n);

    // N-orbits on X, canonical representative = least point
    std::vector<int> orbit_of(a.points, -1);
    std::vector<int> orbit_rep;
    for (int x = 0; x < a.points; ++x) {
        if (orbit_of[x] >= 0) continue;
        int id = static_cast<int>(orbit_rep.size());
        orbit_rep.push_back(x);
        for (Elt m : n.members) orbit_of[a.apply(m, x)] = id;
    }

    // coset representatives in G for each element of G/N
    std::vector<Elt> coset_rep(q.group.order, -1);
    for (Elt x = 0; x < g.order; ++x)
        if (coset_rep[q.coset_of[x]] < 0) coset_rep[q.coset_of[x]] = x;

    EquivariantAction out;
    out.group = q.group;
    out.points = static_cast<int>(orbit_rep.size());
    out.act.assign(q.group.order, std::vector<int>(out.points));
    for (int c = 0; c < q.group.order; ++c)
        for (int i = 0; i < out.points; ++i)
            out.act[c][i] = orbit_of[a.apply(coset_rep[c], orbit_rep[i])];
    out.sigma_x.resize(out.points);
    for (int i = 0; i < out.points; ++i) out.sigma_x[i] = orbit_of[a.sigma_x[orbit_rep[i]]];
    validate_action(out);
    return out;
}

GroupoidComparison compare_groupoids(const FixedPointGroupoidReport& r1,
                                     const FixedPointGroupoidReport& r2) {
    GroupoidComparison cmp;
    if (r1.component_count() != r2.component_count()) {
        std::ostringstream os;
        os << "component counts differ: " << r1.component_count() << " vs "
           << r2.component_count();
        cmp.detail = os.str();
        return cmp;
    }
    using Key = std::pair<int, std::map<int, int>>;
    std::multiset<Key> k1, k2;
    for (const GroupoidComponent& c : r1.components) k1.insert({c.aut_order(), c.aut_histogram});
    for (const GroupoidComponent& c : r2.components) k2.insert({c.aut_order(), c.aut_histogram});
    if (k1 != k2) {
        cmp.detail = "automorphism-group invariants differ";
        return cmp;
    }
    cmp.equivalent = true;
    cmp.detail = "component counts and automorphism invariants match";
    return cmp;
}

}  // namespace realforms
