#include "realforms/witness.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

#include "realforms/errors.hpp"

namespace realforms {

using nlohmann::json;

bool WitnessReport::all_pass() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const WitnessAssertion& a) { return a.pass; });
}

int WitnessReport::passed() const {
    return static_cast<int>(
        std::count_if(assertions.begin(), assertions.end(),
                      [](const WitnessAssertion& a) { return a.pass; }));
}

int WitnessReport::failed() const { return static_cast<int>(assertions.size()) - passed(); }

namespace {

GaussianRational entry_from_json(const json& e) {
    if (!e.is_array() || e.size() != 4)
        fail("CaseNotFound", "matrix entry must be [re_num, re_den, im_num, im_den]");
    return GaussianRational::of(e[0].get<long>(), e[1].get<long>(), e[2].get<long>(),
                                e[3].get<long>());
}

ExactMatrix matrix_from_json(const json& m) {
    int k = static_cast<int>(m.size());
    ExactMatrix out(k);
    for (int r = 0; r < k; ++r) {
        if (static_cast<int>(m[r].size()) != k) fail("CaseNotFound", "matrix is not square");
        for (int c = 0; c < k; ++c) out.at(r, c) = entry_from_json(m[r][c]);
    }
    return out;
}

struct CaseContext {
    std::map<std::string, ExactMatrix> matrices;
    InvolutionSpec involution;

    const ExactMatrix& named(const json& j) const {
        std::string name = j.get<std::string>();
        auto it = matrices.find(name);
        if (it == matrices.end()) fail("CaseNotFound", "case references unknown matrix '" + name + "'");
        return it->second;
    }
};

WitnessAssertion run_assertion(const CaseContext& ctx, const json& a) {
    WitnessAssertion result;
    result.kind = a.at("assert").get<std::string>();
    result.description = a.value("note", "");
    const InvolutionSpec& inv = ctx.involution;

    if (result.kind == "cocycle") {
        const ExactMatrix& m = ctx.named(a.at("matrix"));
        bool expect = a.value("expect", true);
        bool got = is_cocycle(m, inv);
        result.pass = got == expect;
        if (!result.pass)
            result.detail = "matrix " + m.str() + (got ? " is" : " is not") + " a cocycle";
    } else if (result.kind == "connects") {
        const ExactMatrix& h = ctx.named(a.at("h"));
        const ExactMatrix& g = ctx.named(a.at("from"));
        const ExactMatrix& gp = ctx.named(a.at("to"));
        bool expect = a.value("expect", true);
        bool got = connects(h, g, gp, inv);
        result.pass = got == expect;
        if (!result.pass)
            result.detail = "h = " + h.str() + ", sigma(h) g h^-1 = " +
                            (inv.apply(h) * g * h.inverse()).str() + ", wanted " + gp.str();
    } else if (result.kind == "connects-none") {
        const ExactMatrix& g = ctx.named(a.at("from"));
        const ExactMatrix& gp = ctx.named(a.at("to"));
        result.pass = true;
        for (const json& name : a.at("samples")) {
            const ExactMatrix& h = ctx.named(name);
            if (connects(h, g, gp, inv)) {
                result.pass = false;
                result.detail = "sampled h = " + h.str() + " unexpectedly connects " + g.str() +
                                " to " + gp.str();
                break;
            }
        }
    } else if (result.kind == "stabilizer-member" || result.kind == "stabilizer-nonmember") {
        const ExactMatrix& h = ctx.named(a.at("h"));
        const ExactMatrix& g = ctx.named(a.at("g"));
        bool expect = result.kind == "stabilizer-member";
        bool got = in_twisted_stabilizer(h, g, inv);
        result.pass = got == expect;
        if (!result.pass)
            result.detail = "h = " + h.str() + ": sigma(h) g = " + (inv.apply(h) * g).str() +
                            ", g h = " + (g * h).str();
    } else if (result.kind == "product-signature") {
        const ExactMatrix& left = ctx.named(a.at("left"));
        const ExactMatrix& right = ctx.named(a.at("right"));
        int want_p = a.at("p").get<int>();
        int want_q = a.at("q").get<int>();
        ExactMatrix prod = left * right;
        int p = 0, q = 0;
        bool diagonal_pm1 = true;
        for (int r = 0; r < prod.dim() && diagonal_pm1; ++r)
            for (int c = 0; c < prod.dim() && diagonal_pm1; ++c) {
                const GaussianRational& e = prod.at(r, c);
                if (r != c) {
                    if (!e.is_zero()) diagonal_pm1 = false;
                } else if (e == GaussianRational::integer(1)) {
                    ++p;
                } else if (e == GaussianRational::integer(-1)) {
                    ++q;
                } else {
                    diagonal_pm1 = false;
                }
            }
        result.pass = diagonal_pm1 && p == want_p && q == want_q;
        if (!result.pass)
            result.detail = "product " + prod.str() + " does not have signature (" +
                            std::to_string(want_p) + "," + std::to_string(want_q) + ")";
    } else {
        fail("CaseNotFound", "unknown assertion kind '" + result.kind + "'");
    }
    return result;
}

}  // namespace

WitnessReport run_case_text(const std::string& json_text) {
    json doc = json::parse(json_text);
    CaseContext ctx;

    const json& inv = doc.at("involution");
    std::string mode = inv.at("mode").get<std::string>();
    if (mode == "conjugate") {
        ctx.involution.mode = InvolutionSpec::Mode::Conjugate;
    } else if (mode == "conjugate-by-J") {
        ctx.involution.mode = InvolutionSpec::Mode::ConjugateByJ;
        ctx.involution.j = matrix_from_json(inv.at("J"));
    } else {
        fail("CaseNotFound", "unknown involution mode '" + mode + "'");
    }

    for (auto it = doc.at("matrices").begin(); it != doc.at("matrices").end(); ++it)
        ctx.matrices.emplace(it.key(), matrix_from_json(it.value()));

    if (ctx.involution.mode == InvolutionSpec::Mode::ConjugateByJ)
        ctx.involution.validate(ctx.matrices.begin()->second.dim());

    WitnessReport report;
    report.case_id = doc.value("id", "");
    report.title = doc.value("title", "");
    for (const json& a : doc.at("assertions")) report.assertions.push_back(run_assertion(ctx, a));
    return report;
}

WitnessReport run_case(const std::string& case_id) {
    return run_case_text(bundled_case_text(case_id));
}

}  // namespace realforms
