#ifndef REALFORMS_MOD2_HPP
#define REALFORMS_MOD2_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "realforms/group.hpp"

namespace realforms {

// Caps for the normalized bar complex; (|K|-1)^(kmax+1) is the hard wall.
struct Mod2Caps {
    int degree_cap = 6;
    int order_cap_low_degree = 64;   // kmax <= 3
    int order_cap_high_degree = 24;  // kmax >= 4
};

struct F2CohomologyProfile {
    std::string group_label;
    int group_order = 0;
    std::vector<int> dims;  // dims[k] = dim_F2 H^k, k = 0..kmax
};

struct RealizationCohomologyProfile {
    std::vector<int> total;  // summed over components
    struct Component {
        Elt representative;
        std::string rep_label;
        int stabilizer_order;
        std::vector<int> dims;
    };
    std::vector<Component> components;
};

// dim_F2 H^k(BK; F2) for k = 0..kmax, by rank computations on the normalized
// inhomogeneous cochain complex (cochains vanish when any argument is the
// identity; dim C^k = (|K|-1)^k). Error: CapExceeded.
F2CohomologyProfile cohomology_dims(const FiniteGroupWithInvolution& k, int kmax,
                                    const Mod2Caps& caps = {});

// Exhaustively checks d_{j+1} o d_j = 0 for all j < kmax on the normalized
// complex of K. Intended for tests; cost grows like (|K|-1)^(kmax+1).
bool verify_dd_zero(const FiniteGroupWithInvolution& k, int kmax);

// Worst-case pivot storage for the eliminations up to degree kmax, in bytes.
long long bar_memory_estimate_bytes(int order, int kmax);

// Per-degree dimensions of the mod 2 cohomology of the realization: runs h1
// and sums cohomology_dims over the stabilizers of the components.
// Error: CapExceeded (names the offending stabilizer).
RealizationCohomologyProfile realization_cohomology(const FiniteGroupWithInvolution& g, int kmax,
                                                    const Mod2Caps& caps = {});

}  // namespace realforms

#endif
