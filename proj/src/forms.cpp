#include "realforms/forms.hpp"

#include "realforms/errors.hpp"

namespace realforms {

namespace {

// real Hilbert symbol on units: (a,b) = -1 iff a = b = -1
int hilbert_symbol(int a, int b) { return (a < 0 && b < 0) ? -1 : 1; }

}  // namespace

int hasse_by_pairwise_product(int p, int q) {
    int sign = 1;
    int n = p + q;
    auto entry = [p](int i) { return i < p ? 1 : -1; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sign *= hilbert_symbol(entry(i), entry(j));
    return sign;
}

SignatureClass classify_form(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) fail("EmptyForm", "need p,q >= 0 and rank >= 1");
    SignatureClass c;
    c.p = p;
    c.q = q;
    c.disc_sign = (q % 2 == 0) ? 1 : -1;
    c.hasse_sign = ((q * (q - 1) / 2) % 2 == 0) ? 1 : -1;
    if (c.hasse_sign != hasse_by_pairwise_product(p, q))
        fail("EmptyForm", "closed-form Hasse sign disagrees with the pairwise product");
    return c;
}

std::vector<SignatureClass> o_components(int n) {
    if (n < 1) fail("EmptyForm", "rank must be >= 1");
    std::vector<SignatureClass> out;
    out.reserve(n + 1);
    for (int p = n; p >= 0; --p) out.push_back(classify_form(p, n - p));
    return out;
}

bool so_parity_predicate(int p, int q, int s) { return s % 2 == (p * q) % 2; }

std::vector<SignatureClass> so_components(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) fail("EmptyForm", "need p,q >= 0 and rank >= 1");
    int n = p + q;
    std::vector<SignatureClass> out;
    for (int r = n; r >= 0; --r) {
        int s = n - r;
        if (s % 2 == q % 2) out.push_back(classify_form(r, s));
    }
    // where the split-case assumption holds, the parity predicate must agree
    if (q % 2 == (p * q) % 2) {
        for (const SignatureClass& c : out)
            if (!so_parity_predicate(p, q, c.q))
                fail("EmptyForm", "discriminant matching disagrees with the parity predicate");
    }
    return out;
}

std::vector<SignatureClass> matching_signatures(int n, int disc_sign, int hasse_sign) {
    std::vector<SignatureClass> out;
    for (const SignatureClass& c : o_components(n))
        if (c.disc_sign == disc_sign && c.hasse_sign == hasse_sign) out.push_back(c);
    return out;
}

int spin_invariant_rank(const SpinCountQuery& query) {
    int n = query.n;
    if (n < 1) fail("EmptyForm", "spin parameter must be >= 1");
    if (query.parity == SpinParity::Odd) {
        int bonus;
        switch (n % 4) {
            case 0:
            case 3: bonus = 2; break;
            case 1: bonus = 1; break;
            default: bonus = 0; break;  // n = 2 mod 4
        }
        return (2 * n + 1) / 4 + bonus;
    }
    int bonus;
    switch (n % 4) {
        case 0: bonus = 3; break;
        case 1: bonus = 1; break;
        default: bonus = 0; break;  // n = 2, 3 mod 4
    }
    return n / 2 + bonus;
}

int witt_rank(const std::string& kind, const std::vector<int>& params) {
    if (kind == "O") {
        if (params.size() != 1) fail("UnknownKind", "O expects one parameter n");
        return static_cast<int>(o_components(params[0]).size());
    }
    if (kind == "SO") {
        if (params.size() != 2) fail("UnknownKind", "SO expects parameters p q");
        return static_cast<int>(so_components(params[0], params[1]).size());
    }
    if (kind == "Spin-odd") {
        if (params.size() != 1) fail("UnknownKind", "Spin-odd expects one parameter n");
        return spin_invariant_rank({SpinParity::Odd, params[0]});
    }
    if (kind == "Spin-even") {
        if (params.size() != 1) fail("UnknownKind", "Spin-even expects one parameter n");
        return spin_invariant_rank({SpinParity::Even, params[0]});
    }
    fail("UnknownKind", "unknown group kind '" + kind + "'");
}

}  // namespace realforms
