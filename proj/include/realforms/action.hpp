#ifndef REALFORMS_ACTION_HPP
#define REALFORMS_ACTION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "realforms/galois.hpp"
#include "realforms/group.hpp"

namespace realforms {

// A finite G-set with a compatible involution on the points:
// sigmaX(g.x) = sigma(g).sigmaX(x) and sigmaX^2 = id.
struct EquivariantAction {
    FiniteGroupWithInvolution group;
    int points = 0;
    std::vector<std::vector<int>> act;  // act[g][x]
    std::vector<int> sigma_x;

    int apply(Elt g, int x) const { return act[g][x]; }
};

// Cap on |G| * |X| for object enumeration.
inline constexpr long long kDefaultPairCap = 1000000;

void validate_action(const EquivariantAction& a);

using GroupoidObject = std::pair<Elt, int>;  // (g, x) with g.x = sigmaX(x), g sigma(g) = 1

struct GroupoidComponent {
    GroupoidObject representative;          // lexicographically least
    std::vector<GroupoidObject> objects;    // sorted
    std::vector<Elt> automorphisms;         // at the representative, as elements of G
    std::map<int, int> aut_histogram;       // element order -> count
    int aut_order() const { return static_cast<int>(automorphisms.size()); }
};

struct FixedPointGroupoidReport {
    int group_order = 0;
    std::vector<GroupoidObject> objects;    // sorted
    std::vector<GroupoidComponent> components;
    Fraction mass;                          // sum of 1/|Aut| over components

    int object_count() const { return static_cast<int>(objects.size()); }
    int component_count() const { return static_cast<int>(components.size()); }
};

// Objects (g,x) with g.x = sigmaX(x) and g sigma(g) = 1; morphisms
// h : (g,x) -> (sigma(h) g h^-1, h.x); components by orbit closure.
FixedPointGroupoidReport fixed_point_groupoid(const EquivariantAction& a,
                                              long long pair_cap = kDefaultPairCap);

// The one-point action; its fixed-point groupoid reproduces h1 exactly.
EquivariantAction point_action(const FiniteGroupWithInvolution& g);

// Left-regular action of G on itself with sigmaX = sigma.
EquivariantAction regular_action(const FiniteGroupWithInvolution& g);

// Trivial action on k points (sigmaX = id).
EquivariantAction trivial_action(const FiniteGroupWithInvolution& g, int k);

// The G-action on (G x X)/H induced from an H-action. The action's group
// must be subgroup_as_group(g, h). Errors: NotASubgroup, NotSigmaStable.
EquivariantAction induced_action(const FiniteGroupWithInvolution& g, const Subgroup& h,
                                 const EquivariantAction& a);

// The (G/N)-action on N\X; N must be normal, sigma-stable and act freely.
// Errors: NotNormal, NotFree, NotSigmaStable.
EquivariantAction quotient_action(const EquivariantAction& a, const Subgroup& n);

struct GroupoidComparison {
    bool equivalent = false;
    std::string detail;
};

// Equivalence verdict by component count plus the multiset of
// (Aut order, element-order histogram) pairs.
GroupoidComparison compare_groupoids(const FixedPointGroupoidReport& r1,
                                     const FixedPointGroupoidReport& r2);

}  // namespace realforms

#endif
