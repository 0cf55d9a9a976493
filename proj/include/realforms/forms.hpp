#ifndef REALFORMS_FORMS_HPP
#define REALFORMS_FORMS_HPP

#include <string>
#include <vector>

namespace realforms {

// Equivalence class of a real quadratic form: signature plus the derived
// discriminant and Hasse signs.
struct SignatureClass {
    int p = 0;  // positive diagonal entries
    int q = 0;  // negative diagonal entries
    int disc_sign = 1;
    int hasse_sign = 1;

    int rank() const { return p + q; }
    bool operator==(const SignatureClass& o) const { return p == o.p && q == o.q; }
};

enum class SpinParity { Odd, Even };  // Spin(n,n+1) vs Spin(n,n)

struct SpinCountQuery {
    SpinParity parity = SpinParity::Odd;
    int n = 1;
};

// disc = (-1)^q, hasse = (-1)^(q(q-1)/2); the closed forms are checked
// against the pairwise real Hilbert-symbol product. Error: EmptyForm.
SignatureClass classify_form(int p, int q);

// Hasse sign as the literal product over i<j of real Hilbert symbols of the
// diagonal entries (+1 repeated p times, -1 repeated q times).
int hasse_by_pairwise_product(int p, int q);

// All rank-n signature classes, by descending p; length n+1.
std::vector<SignatureClass> o_components(int n);

// All (r,s) with r+s = p+q and equal discriminant, i.e. s = q mod 2.
std::vector<SignatureClass> so_components(int p, int q);

// The parity predicate s = pq mod 2 as literally stated for the split case;
// agrees with discriminant matching whenever q = pq mod 2.
bool so_parity_predicate(int p, int q, int s);

// Rank-n classes agreeing with both given signs.
std::vector<SignatureClass> matching_signatures(int n, int disc_sign, int hasse_sign);

// Closed-form count of independent Witt-sheaf invariants for split spin
// groups: floor((2n+1)/4) resp. floor(n/2) plus a residue bonus.
int spin_invariant_rank(const SpinCountQuery& query);

// Dispatch: O(n) -> n+1; SO(p,q) -> |so_components|; Spin via the closed
// forms. kind is one of "O", "SO", "Spin-odd", "Spin-even".
// Error: UnknownKind.
int witt_rank(const std::string& kind, const std::vector<int>& params);

}  // namespace realforms

#endif
