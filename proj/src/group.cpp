#include "realforms/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

bool FiniteGroupWithInvolution::is_abelian() const {
    for (Elt a = 0; a < order; ++a)
        for (Elt b = a + 1; b < order; ++b)
            if (table[a][b] != table[b][a]) return false;
    return true;
}

bool FiniteGroupWithInvolution::sigma_is_trivial() const {
    for (Elt a = 0; a < order; ++a)
        if (sigma[a] != a) return false;
    return true;
}

int FiniteGroupWithInvolution::element_order(Elt a) const {
    int k = 1;
    Elt x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool Subgroup::contains(Elt g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

std::map<int, int> Subgroup::element_order_histogram() const {
    std::map<int, int> hist;
    for (Elt m : members) ++hist[parent->element_order(m)];
    return hist;
}

namespace {

bool is_permutation(const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : v) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

std::vector<std::string> default_labels(int n, const std::string& stem) {
    std::vector<std::string> out(n);
    out[0] = "1";
    for (int i = 1; i < n; ++i) {
        if (i == 1)
            out[i] = stem;
        else
            out[i] = stem + "^" + std::to_string(i);
    }
    return out;
}

std::vector<std::vector<Elt>> cyclic_table(int n) {
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

// Order-n dihedral group, n even: indices 0..m-1 are r^k, m..n-1 are s*r^k.
std::vector<std::vector<Elt>> dihedral_table(int n) {
    int m = n / 2;
    auto idx = [m](bool flip, int k) { return (flip ? m : 0) + ((k % m + m) % m); };
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (int a = 0; a < n; ++a) {
        bool fa = a >= m;
        int ka = fa ? a - m : a;
        for (int b = 0; b < n; ++b) {
            bool fb = b >= m;
            int kb = fb ? b - m : b;
            // (s^fa r^ka)(s^fb r^kb) = s^(fa+fb) r^(kb + (-1)^fb ka)
            int k = fb ? kb - ka : kb + ka;
            t[a][b] = idx(fa != fb, k);
        }
    }
    return t;
}

std::vector<std::string> dihedral_labels(int n) {
    int m = n / 2;
    std::vector<std::string> out(n);
    for (int k = 0; k < m; ++k) {
        out[k] = k == 0 ? "1" : (k == 1 ? "r" : "r^" + std::to_string(k));
        out[m + k] = k == 0 ? "s" : (k == 1 ? "sr" : "sr^" + std::to_string(k));
    }
    return out;
}

// Quaternion group of order 8: indices [1,-1,i,-i,j,-j,k,-k].
std::vector<std::vector<Elt>> quaternion_table() {
    // unit products: u*v = sign * w over units {1,i,j,k} = {0,1,2,3}
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    std::vector<std::vector<Elt>> t(8, std::vector<Elt>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = (a % 2) ? -1 : +1;
            int ub = b / 2, sb = (b % 2) ? -1 : +1;
            int uw = unit[ua][ub];
            int sw = sign[ua][ub] * sa * sb;
            t[a][b] = 2 * uw + (sw < 0 ? 1 : 0);
        }
    return t;
}

std::string cycle_notation(const std::vector<int>& perm) {
    int m = static_cast<int>(perm.size());
    std::vector<char> seen(m, 0);
    std::ostringstream os;
    bool any = false;
    for (int s = 0; s < m; ++s) {
        if (seen[s] || perm[s] == s) continue;
        any = true;
        os << "(";
        int x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) os << " ";
            os << x;
            first = false;
            x = perm[x];
        }
        os << ")";
    }
    if (!any) return "1";
    return os.str();
}

// BFS closure of permutation generators; discovery order numbers the
// elements, identity first.
void close_permutation_group(const std::vector<std::vector<int>>& gens, int order_cap,
                             std::vector<std::vector<int>>& elements,
                             std::vector<std::vector<Elt>>& table) {
    if (gens.empty()) fail("NotAGroup", "permutation input needs at least one generator");
    int m = static_cast<int>(gens[0].size());
    for (const auto& g : gens) {
        if (!is_permutation(g, m))
            fail("NotAGroup", "generator is not a permutation of 0.." + std::to_string(m - 1));
    }
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    elements.clear();
    elements.push_back(id);
    std::map<std::vector<int>, Elt> index;
    index[id] = 0;
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gens) {
            std::vector<int> prod(m);
            for (int p = 0; p < m; ++p) prod[p] = elements[head][g[p]];  // (x*g)(p) = x(g(p))
            if (!index.count(prod)) {
                if (static_cast<int>(elements.size()) >= order_cap)
                    fail("OrderCapExceeded",
                         "generated group exceeds order cap " + std::to_string(order_cap));
                index[prod] = static_cast<Elt>(elements.size());
                elements.push_back(prod);
            }
        }
    }
    int n = static_cast<int>(elements.size());
    table.assign(n, std::vector<Elt>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(m);
            for (int p = 0; p < m; ++p) prod[p] = elements[a][elements[b][p]];
            auto it = index.find(prod);
            if (it == index.end()) fail("NotAGroup", "generators do not close under product");
            table[a][b] = it->second;
        }
}

}  // namespace

GroupSpec parse_builtin_shorthand(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() < 3 || parts[0] != "builtin")
        fail("NotAGroup", "expected builtin:<name>:<n>[:<involution>], got '" + text + "'");
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Builtin;
    spec.builtin = parts[1];
    try {
        spec.n = std::stoi(parts[2]);
    } catch (...) {
        fail("NotAGroup", "bad builtin parameter '" + parts[2] + "'");
    }
    if (parts.size() >= 4) {
        if (parts[3] == "trivial")
            spec.involution = GroupSpec::InvolutionKind::Trivial;
        else if (parts[3] == "inversion")
            spec.involution = GroupSpec::InvolutionKind::Inversion;
        else
            fail("NotAnInvolution", "unknown involution keyword '" + parts[3] + "'");
    }
    return spec;
}

void validate_group(const FiniteGroupWithInvolution& g) {
    int n = g.order;
    if (n <= 0) fail("NotAGroup", "group order must be positive");
    if (static_cast<int>(g.table.size()) != n) fail("NotAGroup", "table has wrong row count");
    for (const auto& row : g.table)
        if (static_cast<int>(row.size()) != n) fail("NotAGroup", "table row has wrong length");

    // identity pinned to index 0
    for (Elt x = 0; x < n; ++x) {
        if (g.table[0][x] != x || g.table[x][0] != x)
            fail("NotAGroup", "index 0 is not a two-sided identity");
    }
    // rows and columns are permutations
    for (Elt a = 0; a < n; ++a) {
        if (!is_permutation(g.table[a], n))
            fail("NotAGroup", "row " + std::to_string(a) + " is not a permutation");
    }
    for (Elt b = 0; b < n; ++b) {
        std::vector<int> col(n);
        for (Elt a = 0; a < n; ++a) col[a] = g.table[a][b];
        if (!is_permutation(col, n))
            fail("NotAGroup", "column " + std::to_string(b) + " is not a permutation");
    }
    // two-sided inverses, consistent with the cache
    if (static_cast<int>(g.inverse_of.size()) != n) fail("NotAGroup", "inverse cache wrong size");
    for (Elt a = 0; a < n; ++a) {
        Elt b = g.inverse_of[a];
        if (b < 0 || b >= n || g.table[a][b] != 0 || g.table[b][a] != 0)
            fail("NotAGroup", "element " + std::to_string(a) + " lacks a two-sided inverse");
    }
    // associativity: exhaustive below 256, sampled above
    if (n <= 256) {
        for (Elt a = 0; a < n; ++a)
            for (Elt b = 0; b < n; ++b)
                for (Elt c = 0; c < n; ++c)
                    if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                        fail("NotAGroup", "associativity fails at (" + std::to_string(a) + "," +
                                              std::to_string(b) + "," + std::to_string(c) + ")");
    } else {
        std::mt19937_64 rng(0x5eedf00dULL + static_cast<unsigned long long>(n));
        std::uniform_int_distribution<int> pick(0, n - 1);
        long long samples = 10LL * n * n;
        for (long long i = 0; i < samples; ++i) {
            Elt a = pick(rng), b = pick(rng), c = pick(rng);
            if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                fail("NotAGroup", "associativity fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
        }
    }
    // sigma is an automorphism of order dividing 2
    if (!is_permutation(g.sigma, n)) fail("NotAnAutomorphism", "sigma is not a permutation");
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            if (g.sigma[g.table[a][b]] != g.table[g.sigma[a]][g.sigma[b]])
                fail("NotAnAutomorphism", "sigma(xy) != sigma(x)sigma(y) at (" +
                                              std::to_string(a) + "," + std::to_string(b) + ")");
    for (Elt a = 0; a < n; ++a)
        if (g.sigma[g.sigma[a]] != a) fail("NotAnInvolution", "sigma^2 != id");
    if (static_cast<int>(g.labels.size()) != n) fail("NotAGroup", "labels have wrong length");
}

FiniteGroupWithInvolution load_group(const GroupSpec& spec, int order_cap) {
    FiniteGroupWithInvolution g;
    std::vector<std::vector<int>> perm_elements;

    switch (spec.kind) {
        case GroupSpec::Kind::Table:
            g.table = spec.table;
            g.order = static_cast<int>(g.table.size());
            break;
        case GroupSpec::Kind::Permutation:
            close_permutation_group(spec.generators, order_cap, perm_elements, g.table);
            g.order = static_cast<int>(g.table.size());
            break;
        case GroupSpec::Kind::Builtin: {
            if (spec.builtin == "cyclic") {
                if (spec.n < 1) fail("NotAGroup", "cyclic order must be >= 1");
                g.table = cyclic_table(spec.n);
                g.labels = default_labels(spec.n, "g");
            } else if (spec.builtin == "dihedral") {
                if (spec.n < 2 || spec.n % 2 != 0)
                    fail("NotAGroup", "dihedral order must be even and >= 2");
                g.table = dihedral_table(spec.n);
                g.labels = dihedral_labels(spec.n);
            } else if (spec.builtin == "quaternion") {
                if (spec.n != 8) fail("NotAGroup", "quaternion builtin supports order 8 only");
                g.table = quaternion_table();
                g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
            } else if (spec.builtin == "symmetric") {
                if (spec.n < 1) fail("NotAGroup", "symmetric degree must be >= 1");
                std::vector<std::vector<int>> gens;
                if (spec.n >= 2) {
                    std::vector<int> t(spec.n), c(spec.n);
                    std::iota(t.begin(), t.end(), 0);
                    std::swap(t[0], t[1]);
                    for (int i = 0; i < spec.n; ++i) c[i] = (i + 1) % spec.n;
                    gens = {t, c};
                } else {
                    gens = {std::vector<int>{0}};
                }
                close_permutation_group(gens, order_cap, perm_elements, g.table);
            } else {
                fail("NotAGroup", "unknown builtin '" + spec.builtin + "'");
            }
            g.order = static_cast<int>(g.table.size());
            break;
        }
    }

    if (g.order > order_cap)
        fail("OrderCapExceeded", "group order " + std::to_string(g.order) + " exceeds cap " +
                                     std::to_string(order_cap));

    // inverses (needed before involution handling)
    g.inverse_of.assign(g.order, -1);
    for (Elt a = 0; a < g.order; ++a) {
        for (Elt b = 0; b < g.order; ++b)
            if (g.table[a][b] == 0 && g.table[b][a] == 0) {
                g.inverse_of[a] = b;
                break;
            }
        if (g.inverse_of[a] < 0)
            fail("NotAGroup", "element " + std::to_string(a) + " lacks a two-sided inverse");
    }

    switch (spec.involution) {
        case GroupSpec::InvolutionKind::Trivial:
            g.sigma.resize(g.order);
            std::iota(g.sigma.begin(), g.sigma.end(), 0);
            break;
        case GroupSpec::InvolutionKind::Inversion:
            if (!g.is_abelian())
                fail("InversionOnNonabelian",
                     "the inversion involution is only an automorphism of abelian groups");
            g.sigma = g.inverse_of;
            break;
        case GroupSpec::InvolutionKind::Permutation:
            g.sigma = spec.involution_permutation;
            break;
    }

    if (!spec.labels.empty()) {
        if (static_cast<int>(spec.labels.size()) != g.order)
            fail("NotAGroup", "labels length does not match group order");
        g.labels = spec.labels;
    } else if (g.labels.empty()) {
        if (!perm_elements.empty()) {
            g.labels.resize(g.order);
            for (int i = 0; i < g.order; ++i) g.labels[i] = cycle_notation(perm_elements[i]);
        } else {
            g.labels = default_labels(g.order, "g");
            for (int i = 1; i < g.order; ++i) g.labels[i] = "x" + std::to_string(i);
            g.labels[0] = "1";
        }
    }

    validate_group(g);
    return g;
}

std::vector<std::vector<Elt>> conjugacy_classes(const FiniteGroupWithInvolution& g) {
    int n = g.order;
    std::vector<char> done(n, 0);
    std::vector<std::vector<Elt>> classes;
    for (Elt x = 0; x < n; ++x) {
        if (done[x]) continue;
        std::set<Elt> orbit;
        for (Elt h = 0; h < n; ++h) orbit.insert(g.conjugate(h, x));
        std::vector<Elt> cls(orbit.begin(), orbit.end());
        for (Elt y : cls) done[y] = 1;
        classes.push_back(std::move(cls));
    }
    return classes;
}

Subgroup centralizer(const FiniteGroupWithInvolution& g, Elt x) {
    Subgroup s;
    s.parent = &g;
    for (Elt h = 0; h < g.order; ++h)
        if (g.mul(h, x) == g.mul(x, h)) s.members.push_back(h);
    return s;
}

Subgroup whole_group(const FiniteGroupWithInvolution& g) {
    Subgroup s;
    s.parent = &g;
    s.members.resize(g.order);
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
}

Subgroup trivial_subgroup(const FiniteGroupWithInvolution& g) {
    Subgroup s;
    s.parent = &g;
    s.members = {0};
    return s;
}

bool is_subgroup(const FiniteGroupWithInvolution& g, const std::vector<Elt>& members) {
    std::set<Elt> set(members.begin(), members.end());
    if (!set.count(0)) return false;
    for (Elt a : set) {
        if (a < 0 || a >= g.order) return false;
        if (!set.count(g.inv(a))) return false;
        for (Elt b : set)
            if (!set.count(g.mul(a, b))) return false;
    }
    return true;
}

Subgroup make_subgroup(const FiniteGroupWithInvolution& g, std::vector<Elt> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!is_subgroup(g, members))
        fail("NotASubgroup", "member set is not closed under product and inverse");
    Subgroup s;
    s.parent = &g;
    s.members = std::move(members);
    return s;
}

Subgroup subgroup_closure(const FiniteGroupWithInvolution& g, const std::vector<Elt>& generators) {
    std::set<Elt> set = {0};
    std::vector<Elt> queue = {0};
    for (Elt x : generators) {
        if (x < 0 || x >= g.order) fail("NotASubgroup", "generator index out of range");
        if (set.insert(x).second) queue.push_back(x);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        Elt a = queue[head];
        if (set.insert(g.inv(a)).second) queue.push_back(g.inv(a));
        for (size_t j = 0; j < queue.size(); ++j) {
            Elt p = g.mul(a, queue[j]);
            if (set.insert(p).second) queue.push_back(p);
            Elt q = g.mul(queue[j], a);
            if (set.insert(q).second) queue.push_back(q);
        }
    }
    Subgroup s;
    s.parent = &g;
    s.members.assign(set.begin(), set.end());
    return s;
}

Subgroup center(const FiniteGroupWithInvolution& g) {
    Subgroup s;
    s.parent = &g;
    for (Elt z = 0; z < g.order; ++z) {
        bool central = true;
        for (Elt h = 0; h < g.order && central; ++h)
            if (g.mul(z, h) != g.mul(h, z)) central = false;
        if (central) s.members.push_back(z);
    }
    return s;
}

bool is_normal(const FiniteGroupWithInvolution& g, const Subgroup& n) {
    for (Elt h = 0; h < g.order; ++h)
        for (Elt x : n.members)
            if (!n.contains(g.conjugate(h, x))) return false;
    return true;
}

bool is_sigma_stable(const FiniteGroupWithInvolution& g, const Subgroup& n) {
    for (Elt x : n.members)
        if (!n.contains(g.sg(x))) return false;
    return true;
}

QuotientResult quotient(const FiniteGroupWithInvolution& g, const Subgroup& n) {
    if (!is_subgroup(g, n.members)) fail("NotASubgroup", "quotient by a non-subgroup");
    if (!is_normal(g, n)) fail("NotNormal", "subgroup is not normal");
    if (!is_sigma_stable(g, n)) fail("NotSigmaStable", "subgroup is not sigma-stable");

    // cosets keyed by least member; the identity coset contains 0 and sorts first
    std::vector<int> coset_of(g.order, -1);
    std::vector<Elt> reps;
    for (Elt x = 0; x < g.order; ++x) {
        if (coset_of[x] >= 0) continue;
        Elt least = x;  // x is least in its coset by scan order
        int id = static_cast<int>(reps.size());
        reps.push_back(least);
        for (Elt m : n.members) coset_of[g.mul(x, m)] = id;
    }
    int q = static_cast<int>(reps.size());

    FiniteGroupWithInvolution out;
    out.order = q;
    out.table.assign(q, std::vector<Elt>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) out.table[a][b] = coset_of[g.mul(reps[a], reps[b])];
    out.sigma.resize(q);
    for (int a = 0; a < q; ++a) out.sigma[a] = coset_of[g.sg(reps[a])];
    out.inverse_of.resize(q);
    for (int a = 0; a < q; ++a) out.inverse_of[a] = coset_of[g.inv(reps[a])];
    out.labels.resize(q);
    for (int a = 0; a < q; ++a) out.labels[a] = "[" + g.label(reps[a]) + "]";
    validate_group(out);
    return {std::move(out), std::move(coset_of)};
}

int mod2_abelianization_rank(const FiniteGroupWithInvolution& g) {
    std::vector<Elt> gens;
    for (Elt a = 0; a < g.order; ++a) {
        gens.push_back(g.mul(a, a));  // squares
        for (Elt b = 0; b < g.order; ++b)
            gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));  // commutators
    }
    Subgroup h = subgroup_closure(g, gens);
    int index = g.order / h.order();
    int rank = 0;
    while (index > 1) {
        if (index % 2 != 0) fail("NotAGroup", "commutator-square subgroup index is not a 2-power");
        index /= 2;
        ++rank;
    }
    return rank;
}

FiniteGroupWithInvolution subgroup_as_group(const FiniteGroupWithInvolution& g, const Subgroup& h,
                                            bool restrict_sigma) {
    if (!is_subgroup(g, h.members)) fail("NotASubgroup", "member set is not a subgroup");
    if (restrict_sigma && !is_sigma_stable(g, h)) fail("NotSigmaStable", "subgroup is not sigma-stable");
    int m = h.order();
    std::map<Elt, int> index;
    for (int i = 0; i < m; ++i) index[h.members[i]] = i;
    FiniteGroupWithInvolution out;
    out.order = m;
    out.table.assign(m, std::vector<Elt>(m));
    out.sigma.resize(m);
    out.inverse_of.resize(m);
    out.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) out.table[i][j] = index.at(g.mul(h.members[i], h.members[j]));
        out.sigma[i] = restrict_sigma ? index.at(g.sg(h.members[i])) : i;
        out.inverse_of[i] = index.at(g.inv(h.members[i]));
        out.labels[i] = g.label(h.members[i]);
    }
    validate_group(out);
    return out;
}

namespace {

std::string label_of_order_profile(const FiniteGroupWithInvolution& g) {
    int n = g.order;
    if (n == 1) return "1";
    bool cyclic = false;
    for (Elt a = 0; a < n && !cyclic; ++a)
        if (g.element_order(a) == n) cyclic = true;
    if (cyclic) return "C" + std::to_string(n);
    if (g.is_abelian()) {
        bool exp2 = true;
        for (Elt a = 1; a < n && exp2; ++a)
            if (g.mul(a, a) != 0) exp2 = false;
        if (exp2) {
            int k = 0, m = n;
            while (m > 1) {
                m /= 2;
                ++k;
            }
            return "C2^" + std::to_string(k);
        }
        return "abelian-" + std::to_string(n);
    }
    if (n == 8) {
        int involutions = 0;
        for (Elt a = 1; a < n; ++a)
            if (g.mul(a, a) == 0) ++involutions;
        if (involutions == 5) return "D8";
        if (involutions == 1) return "Q8";
    }
    if (n == 6) return "S3";
    return "order-" + std::to_string(n);
}

}  // namespace

std::string small_group_label(const FiniteGroupWithInvolution& g) {
    return label_of_order_profile(g);
}

std::string small_group_label(const Subgroup& h) {
    // order profile is enough for the tiny stabilizers we decorate
    FiniteGroupWithInvolution as_group;
    const FiniteGroupWithInvolution& g = *h.parent;
    int m = h.order();
    std::map<Elt, int> index;
    for (int i = 0; i < m; ++i) index[h.members[i]] = i;
    as_group.order = m;
    as_group.table.assign(m, std::vector<Elt>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            as_group.table[i][j] = index.at(g.mul(h.members[i], h.members[j]));
    as_group.inverse_of.resize(m);
    for (int i = 0; i < m; ++i) as_group.inverse_of[i] = index.at(g.inv(h.members[i]));
    return label_of_order_profile(as_group);
}

}  // namespace realforms
