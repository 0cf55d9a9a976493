#ifndef REALFORMS_GALOIS_HPP
#define REALFORMS_GALOIS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "realforms/group.hpp"

namespace realforms {

// Exact fraction on int64; enough for groupoid masses at desk scale.
struct Fraction {
    long long num = 0;
    long long den = 1;

    static Fraction of(long long n, long long d);
    Fraction plus(const Fraction& other) const;
    bool operator==(const Fraction& other) const { return num == other.num && den == other.den; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// One twisted-conjugacy class: a connected component of the realization,
// carrying its stabilizer subgroup (a strong real form).
struct CocycleClass {
    Elt representative = 0;            // least index in the orbit
    std::vector<Elt> orbit;            // sorted
    Subgroup stabilizer;               // K_g = { h : sigma(h) g = g h }
    std::map<int, int> stabilizer_histogram;  // element order -> count
    std::string stabilizer_label;
};

struct ComponentsReport {
    std::vector<CocycleClass> classes;  // ordered by representative
    std::vector<Elt> cocycles;          // the full sorted solution set of g sigma(g) = 1
    Fraction mass;                      // sum over classes of 1/|K_g|

    int count() const { return static_cast<int>(classes.size()); }
};

struct StrongInvolutionClass {
    Elt representative = 0;
    std::vector<Elt> orbit;          // under g ~ h g sigma(h^-1)
    Elt central_invariant = 0;       // z = g sigma(g), constant on the orbit
    Elt reduced_invariant = 0;       // least member of z * (1+sigma)Z(G)
};

struct StrongInvolutionReport {
    std::vector<Elt> center;                  // Z(G)
    std::vector<Elt> sigma_fixed_center;      // Z(G)^sigma
    std::vector<Elt> norm_subgroup;           // (1+sigma)Z(G) = { z sigma(z) }
    std::vector<StrongInvolutionClass> classes;  // ordered by representative
    // classes grouped by reduced invariant (least coset member -> class indices)
    std::map<Elt, std::vector<int>> by_reduced_invariant;
};

struct TwoTorsionCharacter {
    std::vector<int> values;  // +1 / -1 per element
};

struct TwistPairing {
    Elt twisted_class_rep;    // class of Z^1(sigma_g0)
    Elt image_class_rep;      // matched class of Z^1(sigma)
    int twisted_stab_order;
    int image_stab_order;
    bool orders_match;
    bool histograms_match;
};

struct TwistCheckReport {
    Elt g0;
    bool cocycle_sets_in_bijection;
    bool classes_in_bijection;
    bool stabilizer_data_preserved;
    std::vector<TwistPairing> pairing;

    bool ok() const {
        return cocycle_sets_in_bijection && classes_in_bijection && stabilizer_data_preserved;
    }
};

// Z^1(C2, G) = { g : g sigma(g) = 1 }, sorted.
std::vector<Elt> cocycles(const FiniteGroupWithInvolution& g);

// H^1(C2, G) as twisted-conjugacy classes with stabilizers.
ComponentsReport h1(const FiniteGroupWithInvolution& g);

// |H^1(C2, G)|: the free rank of degree-0 Witt-sheaf cohomology of the
// classifying space.
int witt_invariant_rank(const FiniteGroupWithInvolution& g);

// Classes of g with g sigma(g) central, under g ~ h g sigma(h^-1), with
// central invariants reduced in Z(G)^sigma / (1+sigma) Z(G).
StrongInvolutionReport strong_involutions(const FiniteGroupWithInvolution& g);

// Same group with involution x -> g0 sigma(x) g0^-1. Error: NotACocycle.
FiniteGroupWithInvolution twist(const FiniteGroupWithInvolution& g, Elt g0);

// Verifies that right multiplication by g0 is a bijection
// Z^1(sigma_g0) -> Z^1(sigma) descending to classes, preserving stabilizer
// order and element-order histogram. Error: NotACocycle.
TwistCheckReport twisting_bijection_check(const FiniteGroupWithInvolution& g, Elt g0);

// Validates a +-1 character (multiplicative, sigma-equivariant).
// Errors: NotACharacter, NotEquivariant.
void validate_character(const FiniteGroupWithInvolution& g, const TwoTorsionCharacter& chi);

// For each h1 class: true iff chi restricted to the stabilizer is
// identically +1 (the induced local system is trivial on that component).
std::vector<bool> character_components(const FiniteGroupWithInvolution& g,
                                       const TwoTorsionCharacter& chi);

}  // namespace realforms

#endif
