#include "realforms/mod2.hpp"

#include <algorithm>

#include "realforms/errors.hpp"
#include "realforms/galois.hpp"

namespace realforms {

namespace {

// Dense F2 row of fixed width with a streaming eliminator. Incoming rows are
// sparse (a bar-complex face list); pivots are stored dense.
class F2Eliminator {
public:
    explicit F2Eliminator(long long width)
        : width_(width), words_(static_cast<size_t>((width + 63) / 64)) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces the sparse row (sorted, duplicates already cancelled) and
    // absorbs it if independent.
    void add_sparse_row(const std::vector<long long>& cols) {
        scratch_.assign(words_, 0);
        for (long long c : cols) scratch_[static_cast<size_t>(c >> 6)] ^= 1ULL << (c & 63);
        for (;;) {
            long long lead = lowest_set(scratch_);
            if (lead < 0) return;  // dependent
            auto it = pivot_for_.find(lead);
            if (it == pivot_for_.end()) {
                pivot_for_.emplace(lead, rows_.size());
                rows_.push_back(scratch_);
                return;
            }
            const std::vector<uint64_t>& p = rows_[it->second];
            for (size_t w = 0; w < words_; ++w) scratch_[w] ^= p[w];
        }
    }

private:
    static long long lowest_set(const std::vector<uint64_t>& v) {
        for (size_t w = 0; w < v.size(); ++w)
            if (v[w]) return static_cast<long long>(w * 64 + static_cast<size_t>(__builtin_ctzll(v[w])));
        return -1;
    }

    long long width_;
    size_t words_;
    std::vector<std::vector<uint64_t>> rows_;
    std::map<long long, size_t> pivot_for_;
    std::vector<uint64_t> scratch_;
};

// Normalized bar tuples over the non-identity elements 1..n-1, encoded in
// mixed radix: index = sum (g_i - 1) * (n-1)^(k-i).
struct TupleCodec {
    int n;  // group order

    long long count(int k) const {
        long long c = 1;
        for (int i = 0; i < k; ++i) c *= n - 1;
        return c;
    }
    void decode(long long index, int k, std::vector<Elt>& out) const {
        out.assign(k, 0);
        for (int i = k - 1; i >= 0; --i) {
            out[i] = static_cast<Elt>(index % (n - 1)) + 1;
            index /= n - 1;
        }
    }
    long long encode(const std::vector<Elt>& tuple) const {
        long long index = 0;
        for (Elt g : tuple) index = index * (n - 1) + (g - 1);
        return index;
    }
};

// The sparse row of d_k at the output tuple (k+1 entries): the XOR of the
// face tuples that stay normalized. Duplicate faces cancel mod 2.
std::vector<long long> differential_row(const FiniteGroupWithInvolution& g, const TupleCodec& codec,
                                        const std::vector<Elt>& tuple) {
    int k1 = static_cast<int>(tuple.size());  // k+1
    std::vector<long long> cols;
    std::vector<Elt> face;
    face.reserve(k1 - 1);

    // drop-first
    face.assign(tuple.begin() + 1, tuple.end());
    cols.push_back(codec.encode(face));
    // merge adjacent
    for (int i = 0; i + 1 < k1; ++i) {
        Elt prod = g.mul(tuple[i], tuple[i + 1]);
        if (prod == 0) continue;
        face.clear();
        face.insert(face.end(), tuple.begin(), tuple.begin() + i);
        face.push_back(prod);
        face.insert(face.end(), tuple.begin() + i + 2, tuple.end());
        cols.push_back(codec.encode(face));
    }
    // drop-last
    face.assign(tuple.begin(), tuple.end() - 1);
    cols.push_back(codec.encode(face));

    std::sort(cols.begin(), cols.end());
    std::vector<long long> reduced;
    for (size_t i = 0; i < cols.size();) {
        size_t j = i;
        while (j < cols.size() && cols[j] == cols[i]) ++j;
        if ((j - i) % 2 == 1) reduced.push_back(cols[i]);
        i = j;
    }
    return reduced;
}

int rank_of_differential(const FiniteGroupWithInvolution& g, int k) {
    if (g.order == 1) return 0;
    TupleCodec codec{g.order};
    F2Eliminator elim(codec.count(k));
    long long outputs = codec.count(k + 1);
    std::vector<Elt> tuple;
    for (long long t = 0; t < outputs; ++t) {
        codec.decode(t, k + 1, tuple);
        elim.add_sparse_row(differential_row(g, codec, tuple));
    }
    return elim.rank();
}

void check_caps(const FiniteGroupWithInvolution& k, int kmax, const Mod2Caps& caps,
                const std::string& who) {
    if (kmax < 0 || kmax > caps.degree_cap)
        fail("CapExceeded", who + ": max degree " + std::to_string(kmax) + " exceeds cap " +
                                std::to_string(caps.degree_cap));
    int order_cap = kmax >= 4 ? caps.order_cap_high_degree : caps.order_cap_low_degree;
    if (k.order > order_cap)
        fail("CapExceeded", who + ": group order " + std::to_string(k.order) + " exceeds cap " +
                                std::to_string(order_cap) + " for max degree " +
                                std::to_string(kmax));
}

}  // namespace

long long bar_memory_estimate_bytes(int order, int kmax) {
    if (order <= 1) return 0;
    long long cols = 1;
    for (int i = 0; i < kmax; ++i) cols *= order - 1;
    // pivot rows are bounded by the column count
    return cols * ((cols + 63) / 64) * 8;
}

F2CohomologyProfile cohomology_dims(const FiniteGroupWithInvolution& k, int kmax,
                                    const Mod2Caps& caps) {
    check_caps(k, kmax, caps, "cohomology");
    F2CohomologyProfile profile;
    profile.group_label = small_group_label(k);
    profile.group_order = k.order;
    TupleCodec codec{k.order};

    std::vector<int> rank(kmax + 1, 0);  // rank of d_j for j = 0..kmax
    for (int j = 0; j <= kmax; ++j) rank[j] = rank_of_differential(k, j);

    profile.dims.resize(kmax + 1);
    for (int j = 0; j <= kmax; ++j) {
        long long dim_cj = k.order == 1 ? (j == 0 ? 1 : 0) : codec.count(j);
        long long nullity = dim_cj - rank[j];
        long long below = j == 0 ? 0 : rank[j - 1];
        profile.dims[j] = static_cast<int>(nullity - below);
    }
    return profile;
}

bool verify_dd_zero(const FiniteGroupWithInvolution& k, int kmax) {
    if (k.order == 1) return true;
    TupleCodec codec{k.order};
    std::vector<Elt> outer, inner;
    for (int j = 0; j + 1 <= kmax; ++j) {
        // compose d_{j+1} o d_j: stream over (j+2)-tuples, expand faces twice
        long long outputs = codec.count(j + 2);
        for (long long t = 0; t < outputs; ++t) {
            codec.decode(t, j + 2, outer);
            std::vector<long long> acc;
            for (long long mid : differential_row(k, codec, outer)) {
                codec.decode(mid, j + 1, inner);
                auto cols = differential_row(k, codec, inner);
                acc.insert(acc.end(), cols.begin(), cols.end());
            }
            std::sort(acc.begin(), acc.end());
            for (size_t i = 0; i < acc.size();) {
                size_t jj = i;
                while (jj < acc.size() && acc[jj] == acc[i]) ++jj;
                if ((jj - i) % 2 == 1) return false;
                i = jj;
            }
        }
    }
    return true;
}

RealizationCohomologyProfile realization_cohomology(const FiniteGroupWithInvolution& g, int kmax,
                                                    const Mod2Caps& caps) {
    ComponentsReport report = h1(g);
    RealizationCohomologyProfile profile;
    profile.total.assign(kmax + 1, 0);
    for (const CocycleClass& cls : report.classes) {
        FiniteGroupWithInvolution stab = subgroup_as_group(g, cls.stabilizer, false);
        int order_cap = kmax >= 4 ? caps.order_cap_high_degree : caps.order_cap_low_degree;
        if (stab.order > order_cap)
            fail("CapExceeded", "stabilizer of class " + g.label(cls.representative) +
                                    " has order " + std::to_string(stab.order) +
                                    ", above the cap " + std::to_string(order_cap));
        F2CohomologyProfile dims = cohomology_dims(stab, kmax, caps);
        RealizationCohomologyProfile::Component comp;
        comp.representative = cls.representative;
        comp.rep_label = g.label(cls.representative);
        comp.stabilizer_order = stab.order;
        comp.dims = dims.dims;
        for (int j = 0; j <= kmax; ++j) profile.total[j] += dims.dims[j];
        profile.components.push_back(std::move(comp));
    }
    return profile;
}

}  // namespace realforms
