#ifndef REALFORMS_SERIALIZE_HPP
#define REALFORMS_SERIALIZE_HPP

#include <json.hpp>

#include <string>

#include "realforms/action.hpp"
#include "realforms/forms.hpp"
#include "realforms/galois.hpp"
#include "realforms/group.hpp"
#include "realforms/mod2.hpp"
#include "realforms/witness.hpp"

namespace realforms {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "realforms/1";

// --- input documents ---

GroupSpec group_spec_from_json(const Json& doc);

// Accepts an object (a GroupSpec document), a "builtin:..." shorthand string,
// or a path to a JSON file containing a GroupSpec document.
FiniteGroupWithInvolution load_group_ref(const Json& ref, int order_cap = kDefaultOrderCap);
FiniteGroupWithInvolution load_group_ref_text(const std::string& text,
                                              int order_cap = kDefaultOrderCap);

EquivariantAction action_from_json(const Json& doc, int order_cap = kDefaultOrderCap);

// --- report serialization ---

Json group_to_json(const FiniteGroupWithInvolution& g);
Json subgroup_to_json(const Subgroup& s);
Json components_report_to_json(const FiniteGroupWithInvolution& g, const ComponentsReport& r);
Json strong_involutions_to_json(const FiniteGroupWithInvolution& g,
                                const StrongInvolutionReport& r);
Json twist_check_to_json(const FiniteGroupWithInvolution& g, const TwistCheckReport& r);
Json character_components_to_json(const FiniteGroupWithInvolution& g,
                                  const ComponentsReport& classes,
                                  const std::vector<bool>& trivial);
Json groupoid_report_to_json(const FixedPointGroupoidReport& r);
FixedPointGroupoidReport groupoid_report_from_json(const Json& doc);
Json signature_to_json(const SignatureClass& c);
Json signatures_to_json(const std::vector<SignatureClass>& cs);
Json witness_report_to_json(const WitnessReport& r);
Json cohomology_profile_to_json(const F2CohomologyProfile& p);
Json realization_cohomology_to_json(const RealizationCohomologyProfile& p);
Json comparison_to_json(const GroupoidComparison& c);

// FNV-1a of the canonical serialization; the CLI's input digest.
std::string fnv1a_hex(const std::string& text);

}  // namespace realforms

#endif
