#include "realforms/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace

Fraction Fraction::of(long long n, long long d) {
    if (d == 0) fail("NotAGroup", "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = gcd_ll(n, d);
    if (g == 0) g = 1;
    return Fraction{n / g, d / g};
}

Fraction Fraction::plus(const Fraction& other) const {
    return Fraction::of(num * other.den + other.num * den, den * other.den);
}

std::vector<Elt> cocycles(const FiniteGroupWithInvolution& g) {
    std::vector<Elt> out;
    for (Elt x = 0; x < g.order; ++x)
        if (g.mul(x, g.sg(x)) == 0) out.push_back(x);
    return out;
}

namespace {

// twisted conjugation: h . g = sigma(h) g h^-1, a left G-action on Z^1
Elt twisted_conj(const FiniteGroupWithInvolution& g, Elt h, Elt x) {
    return g.mul(g.mul(g.sg(h), x), g.inv(h));
}

Subgroup twisted_stabilizer(const FiniteGroupWithInvolution& g, Elt x) {
    Subgroup s;
    s.parent = &g;
    for (Elt h = 0; h < g.order; ++h)
        if (g.mul(g.sg(h), x) == g.mul(x, h)) s.members.push_back(h);
    return s;
}

}  // namespace

ComponentsReport h1(const FiniteGroupWithInvolution& g) {
    ComponentsReport report;
    report.cocycles = cocycles(g);
    std::set<Elt> remaining(report.cocycles.begin(), report.cocycles.end());
    Fraction mass{0, 1};
    while (!remaining.empty()) {
        Elt rep = *remaining.begin();
        std::set<Elt> orbit;
        for (Elt h = 0; h < g.order; ++h) orbit.insert(twisted_conj(g, h, rep));
        CocycleClass cls;
        cls.representative = rep;
        cls.orbit.assign(orbit.begin(), orbit.end());
        cls.stabilizer = twisted_stabilizer(g, rep);
        cls.stabilizer_histogram = cls.stabilizer.element_order_histogram();
        cls.stabilizer_label = small_group_label(cls.stabilizer);
        for (Elt y : cls.orbit) remaining.erase(y);
        mass = mass.plus(Fraction::of(1, cls.stabilizer.order()));
        report.classes.push_back(std::move(cls));
    }
    report.mass = mass;
    return report;
}

int witt_invariant_rank(const FiniteGroupWithInvolution& g) {
    return h1(g).count();
}

StrongInvolutionReport strong_involutions(const FiniteGroupWithInvolution& g) {
    StrongInvolutionReport report;
    Subgroup z = center(g);
    report.center = z.members;
    for (Elt c : z.members)
        if (g.sg(c) == c) report.sigma_fixed_center.push_back(c);
    std::set<Elt> norm;
    for (Elt c : z.members) norm.insert(g.mul(c, g.sg(c)));
    report.norm_subgroup.assign(norm.begin(), norm.end());

    // coset reduction of a sigma-fixed central element modulo (1+sigma)Z(G)
    auto reduce = [&](Elt inv_z) {
        Elt least = inv_z;
        for (Elt w : report.norm_subgroup) least = std::min(least, g.mul(inv_z, w));
        return least;
    };

    std::set<Elt> remaining;
    for (Elt x = 0; x < g.order; ++x) {
        Elt zx = g.mul(x, g.sg(x));
        if (z.contains(zx)) {
            if (g.sg(zx) != zx)
                fail("NotAnInvolution", "central invariant not sigma-fixed: internal error");
            remaining.insert(x);
        }
    }
    while (!remaining.empty()) {
        Elt rep = *remaining.begin();
        std::set<Elt> orbit;
        for (Elt h = 0; h < g.order; ++h)
            orbit.insert(g.mul(g.mul(h, rep), g.sg(g.inv(h))));  // h g sigma(h^-1)
        StrongInvolutionClass cls;
        cls.representative = rep;
        cls.orbit.assign(orbit.begin(), orbit.end());
        cls.central_invariant = g.mul(rep, g.sg(rep));
        cls.reduced_invariant = reduce(cls.central_invariant);
        for (Elt y : cls.orbit) remaining.erase(y);
        report.by_reduced_invariant[cls.reduced_invariant].push_back(
            static_cast<int>(report.classes.size()));
        report.classes.push_back(std::move(cls));
    }
    return report;
}

FiniteGroupWithInvolution twist(const FiniteGroupWithInvolution& g, Elt g0) {
    if (g0 < 0 || g0 >= g.order) fail("NotACocycle", "element index out of range");
    if (g.mul(g0, g.sg(g0)) != 0)
        fail("NotACocycle",
             "g0 * sigma(g0) != 1; int(g0) o sigma is only an involution when g0 * sigma(g0) "
             "is central and sigma-fixed, and need not be one here");
    FiniteGroupWithInvolution out = g;
    for (Elt x = 0; x < g.order; ++x) out.sigma[x] = g.mul(g.mul(g0, g.sg(x)), g.inv(g0));
    validate_group(out);
    return out;
}

TwistCheckReport twisting_bijection_check(const FiniteGroupWithInvolution& g, Elt g0) {
    FiniteGroupWithInvolution twisted = twist(g, g0);

    TwistCheckReport report;
    report.g0 = g0;

    std::vector<Elt> z_orig = cocycles(g);
    std::vector<Elt> z_twisted = cocycles(twisted);

    // c -> c * g0 must carry Z^1(sigma_g0) onto Z^1(sigma)
    std::set<Elt> image;
    for (Elt c : z_twisted) image.insert(g.mul(c, g0));
    report.cocycle_sets_in_bijection =
        image.size() == z_twisted.size() &&
        std::equal(image.begin(), image.end(), z_orig.begin(), z_orig.end()) &&
        image.size() == z_orig.size();

    ComponentsReport h_orig = h1(g);
    ComponentsReport h_twisted = h1(twisted);

    // class-of map on the original side
    std::map<Elt, int> class_of;
    for (size_t i = 0; i < h_orig.classes.size(); ++i)
        for (Elt c : h_orig.classes[i].orbit) class_of[c] = static_cast<int>(i);

    bool classes_ok = h_orig.count() == h_twisted.count();
    bool stab_ok = true;
    for (const CocycleClass& cls : h_twisted.classes) {
        // the image of a twisted class must be exactly one original class
        std::set<int> hit;
        for (Elt c : cls.orbit) {
            auto it = class_of.find(g.mul(c, g0));
            if (it == class_of.end()) {
                hit.clear();
                break;
            }
            hit.insert(it->second);
        }
        TwistPairing pair{};
        pair.twisted_class_rep = cls.representative;
        pair.twisted_stab_order = cls.stabilizer.order();
        if (hit.size() != 1) {
            classes_ok = false;
            pair.image_class_rep = -1;
            pair.image_stab_order = 0;
            pair.orders_match = pair.histograms_match = false;
        } else {
            const CocycleClass& target = h_orig.classes[static_cast<size_t>(*hit.begin())];
            if (target.orbit.size() != cls.orbit.size()) classes_ok = false;
            pair.image_class_rep = target.representative;
            pair.image_stab_order = target.stabilizer.order();
            pair.orders_match = pair.image_stab_order == pair.twisted_stab_order;
            pair.histograms_match = target.stabilizer_histogram == cls.stabilizer_histogram;
            if (!pair.orders_match || !pair.histograms_match) stab_ok = false;
        }
        report.pairing.push_back(pair);
    }
    // the pairing must also be injective on classes
    std::set<Elt> targets;
    for (const TwistPairing& p : report.pairing) targets.insert(p.image_class_rep);
    if (targets.size() != report.pairing.size()) classes_ok = false;

    report.classes_in_bijection = classes_ok;
    report.stabilizer_data_preserved = stab_ok;
    return report;
}

void validate_character(const FiniteGroupWithInvolution& g, const TwoTorsionCharacter& chi) {
    if (static_cast<int>(chi.values.size()) != g.order)
        fail("NotACharacter", "character has wrong length");
    for (int v : chi.values)
        if (v != 1 && v != -1) fail("NotACharacter", "character values must be +1 or -1");
    for (Elt a = 0; a < g.order; ++a)
        for (Elt b = 0; b < g.order; ++b)
            if (chi.values[g.mul(a, b)] != chi.values[a] * chi.values[b])
                fail("NotACharacter", "character is not multiplicative");
    for (Elt a = 0; a < g.order; ++a)
        if (chi.values[g.sg(a)] != chi.values[a])
            fail("NotEquivariant", "character is not sigma-equivariant");
}

std::vector<bool> character_components(const FiniteGroupWithInvolution& g,
                                       const TwoTorsionCharacter& chi) {
    validate_character(g, chi);
    ComponentsReport report = h1(g);
    std::vector<bool> trivial;
    trivial.reserve(report.classes.size());
    for (const CocycleClass& cls : report.classes) {
        bool all_one = true;
        for (Elt h : cls.stabilizer.members)
            if (chi.values[h] != 1) {
                all_one = false;
                break;
            }
        trivial.push_back(all_one);
    }
    return trivial;
}

}  // namespace realforms
