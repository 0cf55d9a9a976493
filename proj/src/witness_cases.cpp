#include <map>
#include <string>
#include <vector>

#include "realforms/errors.hpp"
#include "realforms/witness.hpp"

namespace realforms {

namespace {

// Witness suite for the normalizer of the diagonal torus in SL2: elements are
// diag(t, 1/t) and antidiagonal (0 t / -1/t 0), involution is entrywise
// conjugation. Two components: the unit circle (rep: identity) and the
// totally imaginary antidiagonals (rep: (0 i / i 0)).
const std::string kNormalizerSl2 = R"JSON({
  "id": "normalizer-sl2",
  "title": "torus normalizer in SL2: components and stabilizers",
  "involution": {"mode": "conjugate"},
  "matrices": {
    "id":      [[[1,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,1,0,1]]],
    "w":       [[[0,1,0,1],[0,1,1,1]],[[0,1,1,1],[0,1,0,1]]],
    "weyl":    [[[0,1,0,1],[1,1,0,1]],[[-1,1,0,1],[0,1,0,1]]],
    "diag_i":  [[[0,1,1,1],[0,1,0,1]],[[0,1,0,1],[0,1,-1,1]]],
    "diag_mi": [[[0,1,-1,1],[0,1,0,1]],[[0,1,0,1],[0,1,1,1]]],
    "diag_2":  [[[2,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,2,0,1]]],
    "u":       [[[1,1,1,1],[0,1,0,1]],[[0,1,0,1],[1,2,-1,2]]],
    "circle":  [[[3,5,4,5],[0,1,0,1]],[[0,1,0,1],[3,5,-4,5]]]
  },
  "assertions": [
    {"assert": "cocycle", "matrix": "id", "note": "identity is a cocycle"},
    {"assert": "cocycle", "matrix": "w", "note": "imaginary antidiagonal (0 i / i 0) is a cocycle"},
    {"assert": "cocycle", "matrix": "diag_i", "note": "diag(i,-i) lies on the unit circle"},
    {"assert": "cocycle", "matrix": "circle", "note": "diag(z,1/z) with z = (3+4i)/5, |z| = 1"},
    {"assert": "cocycle", "matrix": "weyl", "expect": false,
     "note": "real antidiagonal fails: the antidiagonal entry must be totally imaginary"},
    {"assert": "connects", "h": "u", "from": "diag_i", "to": "id",
     "note": "diag(w,1/w) with w = 1+i rescales by conj(w)^2/|w|^2 = -i"},
    {"assert": "connects", "h": "weyl", "from": "diag_i", "to": "diag_mi",
     "note": "the antidiagonal coset sends diag(z,1/z) to diag(1/z, z)"},
    {"assert": "connects-none", "from": "id", "to": "w",
     "samples": ["u", "diag_2", "weyl", "diag_i", "circle", "w"],
     "note": "sampled elements never connect the circle component to the antidiagonal one"},
    {"assert": "stabilizer-member", "h": "diag_2", "g": "id",
     "note": "real diagonal fixes the identity cocycle"},
    {"assert": "stabilizer-member", "h": "weyl", "g": "id",
     "note": "the order-4 antidiagonal generator fixes the identity cocycle"},
    {"assert": "stabilizer-nonmember", "h": "diag_i", "g": "id",
     "note": "imaginary diagonal is moved by conjugation"},
    {"assert": "stabilizer-member", "h": "diag_i", "g": "w",
     "note": "unit-circle diagonal stabilizes (0 i / i 0); both sides equal (0 1 / -1 0)"},
    {"assert": "stabilizer-member", "h": "circle", "g": "w",
     "note": "any diag(w,1/w) with w conj(w) = 1 stabilizes the antidiagonal rep"},
    {"assert": "stabilizer-nonmember", "h": "diag_2", "g": "w",
     "note": "|w| != 1 fails the stabilizer condition"},
    {"assert": "stabilizer-nonmember", "h": "weyl", "g": "w",
     "note": "antidiagonals would need w conj(w) = -1, impossible"}
  ]
})JSON";

// Witness suite for the split orthogonal group O(1,1) with the form
// x^2 - y^2. The identity component embeds C^* as E(z) = ((z+1/z)/2, (z-1/z)/2
// ; (z-1/z)/2, (z+1/z)/2); the reflection coset is J E(z) with J = diag(1,-1).
// Three components: identity; diag(1,-1); diag(-1,1).
const std::string kO11 = R"JSON({
  "id": "o11",
  "title": "split O(1,1): three components, O(1,1;R) and two O(2;R) stabilizers",
  "involution": {"mode": "conjugate"},
  "matrices": {
    "id":   [[[1,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,1,0,1]]],
    "j":    [[[1,1,0,1],[0,1,0,1]],[[0,1,0,1],[-1,1,0,1]]],
    "jm":   [[[-1,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,1,0,1]]],
    "e_i":  [[[0,1,0,1],[0,1,1,1]],[[0,1,1,1],[0,1,0,1]]],
    "e_2":  [[[5,4,0,1],[3,4,0,1]],[[3,4,0,1],[5,4,0,1]]],
    "e_c":  [[[3,5,0,1],[0,1,4,5]],[[0,1,4,5],[3,5,0,1]]],
    "e_u":  [[[3,4,1,4],[1,4,3,4]],[[1,4,3,4],[3,4,1,4]]],
    "je4":  [[[17,8,0,1],[15,8,0,1]],[[-15,8,0,1],[-17,8,0,1]]],
    "je_quarter": [[[17,8,0,1],[-15,8,0,1]],[[15,8,0,1],[-17,8,0,1]]],
    "je_i": [[[0,1,0,1],[0,1,1,1]],[[0,1,-1,1],[0,1,0,1]]],
    "je_2": [[[5,4,0,1],[3,4,0,1]],[[-3,4,0,1],[-5,4,0,1]]]
  },
  "assertions": [
    {"assert": "cocycle", "matrix": "id", "note": "identity is a cocycle"},
    {"assert": "cocycle", "matrix": "j", "note": "diag(1,-1) is a cocycle"},
    {"assert": "cocycle", "matrix": "jm", "note": "diag(-1,1) is a cocycle"},
    {"assert": "cocycle", "matrix": "e_i", "note": "E(i): unit-circle element of the torus"},
    {"assert": "cocycle", "matrix": "e_c", "note": "E((3+4i)/5): unit-circle element"},
    {"assert": "cocycle", "matrix": "je4", "note": "reflection coset with real parameter"},
    {"assert": "cocycle", "matrix": "je_i", "expect": false,
     "note": "reflection coset needs a real parameter; z = i fails"},
    {"assert": "connects", "h": "e_u", "from": "e_i", "to": "id",
     "note": "torus element with w = 1+i rescales by conj(w)/w = -i"},
    {"assert": "connects", "h": "e_2", "from": "je4", "to": "j",
     "note": "torus elements rescale the reflection parameter by 1/|w|^2 = 1/4"},
    {"assert": "connects", "h": "j", "from": "je4", "to": "je_quarter",
     "note": "reflections invert the parameter"},
    {"assert": "connects-none", "from": "j", "to": "jm",
     "samples": ["e_2", "e_i", "e_u", "j", "je_2", "je_i", "id", "e_c"],
     "note": "positive and negative reflection parameters are separate components"},
    {"assert": "connects-none", "from": "id", "to": "j",
     "samples": ["e_2", "e_i", "e_u", "j", "je_2", "je_i", "id", "e_c"],
     "note": "morphisms never cross the coset decomposition"},
    {"assert": "stabilizer-member", "h": "e_2", "g": "id",
     "note": "real torus element fixes the identity cocycle"},
    {"assert": "stabilizer-member", "h": "j", "g": "id",
     "note": "the real reflection fixes the identity cocycle"},
    {"assert": "stabilizer-nonmember", "h": "e_i", "g": "id",
     "note": "E(i) is not real, so it moves the identity cocycle"},
    {"assert": "stabilizer-member", "h": "e_i", "g": "j",
     "note": "unit-circle torus elements stabilize diag(1,-1)"},
    {"assert": "stabilizer-member", "h": "e_c", "g": "j",
     "note": "E((3+4i)/5) has |z| = 1 and stabilizes diag(1,-1)"},
    {"assert": "stabilizer-member", "h": "je_i", "g": "j",
     "note": "the reflection coset contributes unit-circle elements as well"},
    {"assert": "stabilizer-nonmember", "h": "e_2", "g": "j",
     "note": "|z| != 1 torus elements are excluded"},
    {"assert": "stabilizer-member", "h": "e_i", "g": "jm",
     "note": "the diag(-1,1) stabilizer also consists of unit-circle elements"},
    {"assert": "stabilizer-nonmember", "h": "e_2", "g": "jm",
     "note": "|z| != 1 torus elements are excluded here too"}
  ]
})JSON";

// Witness suite for sign-diagonal cocycles in the rank-3 orthogonal group
// with base form diag(1,1,-1), involution entrywise conjugation. Every sign
// diagonal is a cocycle; its component is labeled by the signature of the
// product with the base form; scripted elements connect equal labels.
const std::string kOrthogonalDiag = R"JSON({
  "id": "orthogonal-diag",
  "title": "rank-3 sign diagonals: cocycles, component labels, stabilizers",
  "involution": {"mode": "conjugate"},
  "matrices": {
    "q":     [[[1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[-1,1,0,1]]],
    "id3":   [[[1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[1,1,0,1]]],
    "d_mpp": [[[-1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[1,1,0,1]]],
    "d_pmp": [[[1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[-1,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[1,1,0,1]]],
    "d_mmp": [[[-1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[-1,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[1,1,0,1]]],
    "d_mpm": [[[-1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[1,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[-1,1,0,1]]],
    "d_pmm": [[[1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[-1,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[-1,1,0,1]]],
    "d_mmm": [[[-1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[-1,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[-1,1,0,1]]],
    "p12":   [[[0,1,0,1],[1,1,0,1],[0,1,0,1]],[[1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[1,1,0,1]]],
    "mix23": [[[1,1,0,1],[0,1,0,1],[0,1,0,1]],[[0,1,0,1],[0,1,0,1],[0,1,1,1]],[[0,1,0,1],[0,1,1,1],[0,1,0,1]]],
    "mix13": [[[0,1,0,1],[0,1,0,1],[0,1,1,1]],[[0,1,0,1],[1,1,0,1],[0,1,0,1]],[[0,1,1,1],[0,1,0,1],[0,1,0,1]]],
    "b13":   [[[5,4,0,1],[0,1,0,1],[3,4,0,1]],[[0,1,0,1],[1,1,0,1],[0,1,0,1]],[[3,4,0,1],[0,1,0,1],[5,4,0,1]]]
  },
  "assertions": [
    {"assert": "cocycle", "matrix": "id3", "note": "sign diagonal +++ is a cocycle"},
    {"assert": "cocycle", "matrix": "d_mpp", "note": "sign diagonal -++ is a cocycle"},
    {"assert": "cocycle", "matrix": "d_pmp", "note": "sign diagonal +-+ is a cocycle"},
    {"assert": "cocycle", "matrix": "q", "note": "sign diagonal ++- is a cocycle"},
    {"assert": "cocycle", "matrix": "d_mmp", "note": "sign diagonal --+ is a cocycle"},
    {"assert": "cocycle", "matrix": "d_mpm", "note": "sign diagonal -+- is a cocycle"},
    {"assert": "cocycle", "matrix": "d_pmm", "note": "sign diagonal +-- is a cocycle"},
    {"assert": "cocycle", "matrix": "d_mmm", "note": "sign diagonal --- is a cocycle"},
    {"assert": "product-signature", "left": "id3", "right": "q", "p": 2, "q": 1,
     "note": "identity cocycle is labeled by the base form itself"},
    {"assert": "product-signature", "left": "q", "right": "q", "p": 3, "q": 0,
     "note": "twisting by the base form lands on the definite form"},
    {"assert": "product-signature", "left": "d_mpp", "right": "q", "p": 1, "q": 2,
     "note": "-++ twists the base form to signature (1,2)"},
    {"assert": "product-signature", "left": "d_pmp", "right": "q", "p": 1, "q": 2,
     "note": "+-+ twists the base form to signature (1,2)"},
    {"assert": "product-signature", "left": "d_mmp", "right": "q", "p": 0, "q": 3,
     "note": "--+ twists the base form to the negative definite form"},
    {"assert": "product-signature", "left": "d_mpm", "right": "q", "p": 2, "q": 1,
     "note": "-+- stays in the (2,1) component"},
    {"assert": "product-signature", "left": "d_pmm", "right": "q", "p": 2, "q": 1,
     "note": "+-- stays in the (2,1) component"},
    {"assert": "product-signature", "left": "d_mmm", "right": "q", "p": 1, "q": 2,
     "note": "--- twists the base form to signature (1,2)"},
    {"assert": "connects", "h": "p12", "from": "d_mpp", "to": "d_pmp",
     "note": "real form-preserving swap connects equal labels"},
    {"assert": "connects", "h": "mix23", "from": "id3", "to": "d_pmm",
     "note": "imaginary rotation in the (2,3) plane connects equal labels"},
    {"assert": "connects", "h": "mix13", "from": "id3", "to": "d_mpm",
     "note": "imaginary rotation in the (1,3) plane connects equal labels"},
    {"assert": "connects-none", "from": "id3", "to": "q",
     "samples": ["p12", "mix23", "mix13", "b13", "q", "d_mmm", "id3"],
     "note": "labels (2,1) and (3,0) are distinct components under sampling"},
    {"assert": "stabilizer-member", "h": "p12", "g": "q",
     "note": "the swap preserves the definite-label cocycle"},
    {"assert": "stabilizer-member", "h": "mix23", "g": "q",
     "note": "the twisted compact form contains imaginary rotations"},
    {"assert": "stabilizer-nonmember", "h": "b13", "g": "q",
     "note": "a real hyperbolic boost is not in the compact stabilizer"},
    {"assert": "stabilizer-member", "h": "b13", "g": "id3",
     "note": "real boosts stabilize the identity cocycle"},
    {"assert": "stabilizer-nonmember", "h": "mix23", "g": "id3",
     "note": "non-real elements move the identity cocycle"}
  ]
})JSON";

const std::map<std::string, const std::string*>& registry() {
    static const std::map<std::string, const std::string*> cases = {
        {"normalizer-sl2", &kNormalizerSl2},
        {"o11", &kO11},
        {"orthogonal-diag", &kOrthogonalDiag},
    };
    return cases;
}

}  // namespace

std::vector<std::string> bundled_case_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, text] : registry()) ids.push_back(id);
    return ids;
}

const std::string& bundled_case_text(const std::string& case_id) {
    const auto& cases = registry();
    auto it = cases.find(case_id);
    if (it == cases.end()) fail("CaseNotFound", "no bundled case named '" + case_id + "'");
    return *it->second;
}

}  // namespace realforms
