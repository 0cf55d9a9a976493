#ifndef REALFORMS_GROUP_HPP
#define REALFORMS_GROUP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace realforms {

using Elt = int;  // element index into a Cayley table; 0 is always the identity

// A finite group given by its full multiplication table, together with an
// automorphism sigma of order dividing 2. All values are immutable after
// construction; operations on them are pure.
struct FiniteGroupWithInvolution {
    int order = 0;
    std::vector<std::vector<Elt>> table;  // table[a][b] = a*b
    std::vector<Elt> sigma;               // the involution, as a permutation
    std::vector<Elt> inverse_of;          // cached two-sided inverses
    std::vector<std::string> labels;

    Elt mul(Elt a, Elt b) const { return table[a][b]; }
    Elt inv(Elt a) const { return inverse_of[a]; }
    Elt sg(Elt a) const { return sigma[a]; }
    Elt conjugate(Elt h, Elt g) const { return mul(mul(h, g), inv(h)); }  // h g h^-1

    bool is_abelian() const;
    bool sigma_is_trivial() const;
    // multiplicative order of an element
    int element_order(Elt a) const;
    const std::string& label(Elt a) const { return labels[a]; }
};

// A subgroup as a sorted member set; the parent group is referenced, not owned.
struct Subgroup {
    const FiniteGroupWithInvolution* parent = nullptr;
    std::vector<Elt> members;  // sorted, contains 0

    int order() const { return static_cast<int>(members.size()); }
    bool contains(Elt g) const;
    // histogram: element order -> multiplicity, over the members
    std::map<int, int> element_order_histogram() const;
};

// Input document for a group: an explicit table, permutation generators,
// or a builtin family, plus an involution spec.
struct GroupSpec {
    enum class Kind { Table, Permutation, Builtin };
    enum class InvolutionKind { Trivial, Inversion, Permutation };

    Kind kind = Kind::Builtin;
    std::vector<std::vector<Elt>> table;             // Kind::Table
    std::vector<std::vector<int>> generators;        // Kind::Permutation (images on m points)
    std::string builtin;                             // cyclic | dihedral | quaternion | symmetric
    int n = 0;                                       // builtin parameter

    InvolutionKind involution = InvolutionKind::Trivial;
    std::vector<Elt> involution_permutation;

    std::vector<std::string> labels;                 // optional
};

inline constexpr int kDefaultOrderCap = 5000;

// Parses "builtin:<name>:<n>[:<involution>]", e.g. "builtin:cyclic:6:inversion".
GroupSpec parse_builtin_shorthand(const std::string& text);

// Compiles a spec into a validated group.
// Errors: NotAGroup, NotAnAutomorphism, NotAnInvolution, OrderCapExceeded,
// InversionOnNonabelian.
FiniteGroupWithInvolution load_group(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

// Re-validates an already-built group (axioms, sigma automorphism, sigma^2 = id).
// Associativity is exhaustive for order <= 256, sampled (>= 10*n^2 triples) above.
void validate_group(const FiniteGroupWithInvolution& g);

// Ordinary conjugacy classes, sorted by least member; their union is everything.
std::vector<std::vector<Elt>> conjugacy_classes(const FiniteGroupWithInvolution& g);

Subgroup centralizer(const FiniteGroupWithInvolution& g, Elt x);

Subgroup whole_group(const FiniteGroupWithInvolution& g);
Subgroup trivial_subgroup(const FiniteGroupWithInvolution& g);
Subgroup make_subgroup(const FiniteGroupWithInvolution& g, std::vector<Elt> members);
Subgroup subgroup_closure(const FiniteGroupWithInvolution& g, const std::vector<Elt>& generators);
Subgroup center(const FiniteGroupWithInvolution& g);

bool is_subgroup(const FiniteGroupWithInvolution& g, const std::vector<Elt>& members);
bool is_normal(const FiniteGroupWithInvolution& g, const Subgroup& n);
bool is_sigma_stable(const FiniteGroupWithInvolution& g, const Subgroup& n);

// Coset map from the quotient construction: element -> coset index.
struct QuotientResult {
    FiniteGroupWithInvolution group;
    std::vector<int> coset_of;  // size |G|
};

// G/N with the induced involution. Errors: NotNormal, NotSigmaStable.
QuotientResult quotient(const FiniteGroupWithInvolution& g, const Subgroup& n);

// Rank over F2 of G / ([G,G] * G^2).
int mod2_abelianization_rank(const FiniteGroupWithInvolution& g);

// The subgroup as a standalone group: members reindexed 0..|H|-1 in sorted
// order (identity stays at 0). With restrict_sigma the involution is the
// restriction of sigma (the subgroup must be sigma-stable); without it the
// result carries the trivial involution, which is the canonical structure on
// a twisted-conjugation stabilizer (the twisted involution fixes it pointwise).
FiniteGroupWithInvolution subgroup_as_group(const FiniteGroupWithInvolution& g, const Subgroup& h,
                                            bool restrict_sigma = true);

// Best-effort isomorphism-type label for small groups ("C6", "C2^3", "D8",
// "Q8", ...); falls back to "order-n".
std::string small_group_label(const FiniteGroupWithInvolution& g);
std::string small_group_label(const Subgroup& h);

}  // namespace realforms

#endif
