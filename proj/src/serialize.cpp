#include "realforms/serialize.hpp"

#include <fstream>
#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

GroupSpec group_spec_from_json(const Json& doc) {
    GroupSpec spec;
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "table") {
        spec.kind = GroupSpec::Kind::Table;
        spec.table = doc.at("table").get<std::vector<std::vector<Elt>>>();
    } else if (kind == "permutation") {
        spec.kind = GroupSpec::Kind::Permutation;
        spec.generators = doc.at("generators").get<std::vector<std::vector<int>>>();
    } else if (kind == "builtin") {
        spec.kind = GroupSpec::Kind::Builtin;
        spec.builtin = doc.at("builtin").get<std::string>();
        spec.n = doc.at("n").get<int>();
    } else {
        fail("NotAGroup", "unknown group kind '" + kind + "'");
    }
    if (doc.contains("involution")) {
        const Json& inv = doc["involution"];
        if (inv.is_string()) {
            std::string s = inv.get<std::string>();
            if (s == "trivial")
                spec.involution = GroupSpec::InvolutionKind::Trivial;
            else if (s == "inversion")
                spec.involution = GroupSpec::InvolutionKind::Inversion;
            else
                fail("NotAnInvolution", "unknown involution keyword '" + s + "'");
        } else {
            spec.involution = GroupSpec::InvolutionKind::Permutation;
            spec.involution_permutation = inv.at("permutation").get<std::vector<Elt>>();
        }
    }
    if (doc.contains("labels")) spec.labels = doc["labels"].get<std::vector<std::string>>();
    return spec;
}

FiniteGroupWithInvolution load_group_ref(const Json& ref, int order_cap) {
    if (ref.is_string()) return load_group_ref_text(ref.get<std::string>(), order_cap);
    return load_group(group_spec_from_json(ref), order_cap);
}

FiniteGroupWithInvolution load_group_ref_text(const std::string& text, int order_cap) {
    if (text.rfind("builtin:", 0) == 0)
        return load_group(parse_builtin_shorthand(text), order_cap);
    std::ifstream in(text);
    if (!in) fail("NotAGroup", "cannot open group file '" + text + "'");
    Json doc = Json::parse(in);
    return load_group(group_spec_from_json(doc), order_cap);
}

EquivariantAction action_from_json(const Json& doc, int order_cap) {
    EquivariantAction a;
    a.group = load_group_ref(doc.at("group"), order_cap);
    a.points = doc.at("points").get<int>();
    a.act = doc.at("action").get<std::vector<std::vector<int>>>();
    a.sigma_x = doc.at("sigmaX").get<std::vector<int>>();
    validate_action(a);
    return a;
}

Json group_to_json(const FiniteGroupWithInvolution& g) {
    Json j;
    j["order"] = g.order;
    j["labels"] = g.labels;
    j["involution"] = g.sigma;
    return j;
}

namespace {

Json histogram_to_json(const std::map<int, int>& hist) {
    Json out = Json::array();
    for (const auto& [order, count] : hist) out.push_back(Json::array({order, count}));
    return out;
}

Json element_to_json(const FiniteGroupWithInvolution& g, Elt e) {
    Json j;
    j["index"] = e;
    j["label"] = g.label(e);
    return j;
}

}  // namespace

Json subgroup_to_json(const Subgroup& s) {
    Json j;
    j["order"] = s.order();
    j["members"] = s.members;
    j["label"] = small_group_label(s);
    j["element_order_histogram"] = histogram_to_json(s.element_order_histogram());
    return j;
}

Json components_report_to_json(const FiniteGroupWithInvolution& g, const ComponentsReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["group"] = group_to_json(g);
    j["cocycles"] = r.cocycles;
    j["count"] = r.count();
    j["mass"] = r.mass.str();
    Json classes = Json::array();
    for (const CocycleClass& c : r.classes) {
        Json cls;
        cls["representative"] = element_to_json(g, c.representative);
        cls["orbit"] = c.orbit;
        cls["orbit_size"] = static_cast<int>(c.orbit.size());
        cls["stabilizer"] = subgroup_to_json(c.stabilizer);
        classes.push_back(std::move(cls));
    }
    j["classes"] = std::move(classes);
    return j;
}

Json strong_involutions_to_json(const FiniteGroupWithInvolution& g,
                                const StrongInvolutionReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["group"] = group_to_json(g);
    j["center"] = r.center;
    j["sigma_fixed_center"] = r.sigma_fixed_center;
    j["norm_subgroup"] = r.norm_subgroup;
    Json classes = Json::array();
    for (const StrongInvolutionClass& c : r.classes) {
        Json cls;
        cls["representative"] = element_to_json(g, c.representative);
        cls["orbit"] = c.orbit;
        cls["central_invariant"] = element_to_json(g, c.central_invariant);
        cls["reduced_invariant"] = element_to_json(g, c.reduced_invariant);
        classes.push_back(std::move(cls));
    }
    j["classes"] = std::move(classes);
    Json grouped = Json::array();
    for (const auto& [inv, ids] : r.by_reduced_invariant) {
        Json e;
        e["reduced_invariant"] = element_to_json(g, inv);
        e["class_indices"] = ids;
        grouped.push_back(std::move(e));
    }
    j["by_reduced_invariant"] = std::move(grouped);
    return j;
}

Json twist_check_to_json(const FiniteGroupWithInvolution& g, const TwistCheckReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["g0"] = element_to_json(g, r.g0);
    j["cocycle_sets_in_bijection"] = r.cocycle_sets_in_bijection;
    j["classes_in_bijection"] = r.classes_in_bijection;
    j["stabilizer_data_preserved"] = r.stabilizer_data_preserved;
    j["ok"] = r.ok();
    Json pairs = Json::array();
    for (const TwistPairing& p : r.pairing) {
        Json e;
        e["twisted_class"] = element_to_json(g, p.twisted_class_rep);
        e["image_class"] = p.image_class_rep >= 0 ? element_to_json(g, p.image_class_rep) : Json();
        e["twisted_stabilizer_order"] = p.twisted_stab_order;
        e["image_stabilizer_order"] = p.image_stab_order;
        e["orders_match"] = p.orders_match;
        e["histograms_match"] = p.histograms_match;
        pairs.push_back(std::move(e));
    }
    j["pairing"] = std::move(pairs);
    return j;
}

Json character_components_to_json(const FiniteGroupWithInvolution& g,
                                  const ComponentsReport& classes,
                                  const std::vector<bool>& trivial) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["group"] = group_to_json(g);
    Json out = Json::array();
    for (size_t i = 0; i < classes.classes.size(); ++i) {
        Json e;
        e["representative"] = element_to_json(g, classes.classes[i].representative);
        e["stabilizer_order"] = classes.classes[i].stabilizer.order();
        e["restriction_trivial"] = static_cast<bool>(trivial[i]);
        out.push_back(std::move(e));
    }
    j["components"] = std::move(out);
    return j;
}

Json groupoid_report_to_json(const FixedPointGroupoidReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["group_order"] = r.group_order;
    j["object_count"] = r.object_count();
    j["mass"] = r.mass.str();
    Json objects = Json::array();
    for (const auto& [g, x] : r.objects) objects.push_back(Json::array({g, x}));
    j["objects"] = std::move(objects);
    Json comps = Json::array();
    for (const GroupoidComponent& c : r.components) {
        Json e;
        e["representative"] = Json::array({c.representative.first, c.representative.second});
        e["size"] = static_cast<int>(c.objects.size());
        e["aut_order"] = c.aut_order();
        e["aut_members"] = c.automorphisms;
        e["aut_element_order_histogram"] = histogram_to_json(c.aut_histogram);
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    return j;
}

FixedPointGroupoidReport groupoid_report_from_json(const Json& doc) {
    FixedPointGroupoidReport r;
    r.group_order = doc.at("group_order").get<int>();
    for (const Json& o : doc.at("objects"))
        r.objects.push_back({o.at(0).get<Elt>(), o.at(1).get<int>()});
    for (const Json& c : doc.at("components")) {
        GroupoidComponent comp;
        comp.representative = {c.at("representative").at(0).get<Elt>(),
                               c.at("representative").at(1).get<int>()};
        comp.automorphisms = c.at("aut_members").get<std::vector<Elt>>();
        for (const Json& pair : c.at("aut_element_order_histogram"))
            comp.aut_histogram[pair.at(0).get<int>()] = pair.at(1).get<int>();
        r.components.push_back(std::move(comp));
    }
    // recompute the mass from the parsed components
    Fraction mass{0, 1};
    for (const GroupoidComponent& c : r.components)
        mass = mass.plus(Fraction::of(1, c.aut_order()));
    r.mass = mass;
    return r;
}

Json signature_to_json(const SignatureClass& c) {
    Json j;
    j["signature"] = Json::array({c.p, c.q});
    j["rank"] = c.rank();
    j["disc_sign"] = c.disc_sign;
    j["hasse_sign"] = c.hasse_sign;
    return j;
}

Json signatures_to_json(const std::vector<SignatureClass>& cs) {
    Json out = Json::array();
    for (const SignatureClass& c : cs) out.push_back(signature_to_json(c));
    return out;
}

Json witness_report_to_json(const WitnessReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["case"] = r.case_id;
    j["title"] = r.title;
    j["all_pass"] = r.all_pass();
    j["passed"] = r.passed();
    j["failed"] = r.failed();
    Json list = Json::array();
    for (const WitnessAssertion& a : r.assertions) {
        Json e;
        e["assert"] = a.kind;
        e["note"] = a.description;
        e["pass"] = a.pass;
        if (!a.detail.empty()) e["detail"] = a.detail;
        list.push_back(std::move(e));
    }
    j["assertions"] = std::move(list);
    return j;
}

Json cohomology_profile_to_json(const F2CohomologyProfile& p) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["group_label"] = p.group_label;
    j["group_order"] = p.group_order;
    j["dims"] = p.dims;
    return j;
}

Json realization_cohomology_to_json(const RealizationCohomologyProfile& p) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["total"] = p.total;
    Json comps = Json::array();
    for (const auto& c : p.components) {
        Json e;
        e["representative"] = c.representative;
        e["representative_label"] = c.rep_label;
        e["stabilizer_order"] = c.stabilizer_order;
        e["dims"] = c.dims;
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    return j;
}

Json comparison_to_json(const GroupoidComparison& c) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["equivalent"] = c.equivalent;
    j["detail"] = c.detail;
    return j;
}

std::string fnv1a_hex(const std::string& text) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace realforms
