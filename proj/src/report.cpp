#include "minorkit/report.hpp"

#include <json.hpp>
#include <sstream>

#include "minorkit/parse.hpp"

namespace minorkit {

namespace {

using ordered_json = nlohmann::ordered_json;

InvariantStatus status_from_name(const std::string& s) {
    for (InvariantStatus v : {InvariantStatus::exact, InvariantStatus::upper_bound,
                              InvariantStatus::lower_bound, InvariantStatus::unknown})
        if (invariant_status_name(v) == s) return v;
    fail(ErrorKind::parse, "unknown invariant status '" + s + "'");
}

Construction construction_from_name(const std::string& s) {
    for (Construction v : {Construction::schmitt_vogel, Construction::bruns_poset,
                           Construction::scroll_sci, Construction::jordan_q, Construction::an_kn,
                           Construction::maral_reduce, Construction::nilpotent_extend})
        if (construction_name(v) == s) return v;
    fail(ErrorKind::parse, "unknown construction '" + s + "'");
}

WitnessStatus witness_status_from_name(const std::string& s) {
    for (WitnessStatus v :
         {WitnessStatus::unverified, WitnessStatus::verified, WitnessStatus::failed})
        if (witness_status_name(v) == s) return v;
    fail(ErrorKind::parse, "unknown witness status '" + s + "'");
}

ordered_json value_json(const InvariantValue& v) {
    ordered_json j;
    j["value"] = v.value;
    j["status"] = invariant_status_name(v.status);
    j["citation"] = v.citation;
    return j;
}

InvariantValue value_from_json(const ordered_json& j) {
    InvariantValue v;
    v.value = j.at("value").get<long>();
    v.status = status_from_name(j.at("status").get<std::string>());
    v.citation = j.at("citation").get<std::string>();
    return v;
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const Polynomial& p : ps) out.push_back(p.str());
    return out;
}

std::vector<Polynomial> polys_from_strings(const RingPtr& ring,
                                           const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const std::string& s : ss) out.push_back(parse_polynomial(ring, s));
    return out;
}

} // namespace

std::string report_to_json(const Report& r) {
    ordered_json j;
    j["schema"] = 1;
    j["pattern"] = r.pattern;
    j["columns"] = r.columns;
    j["characteristic"] = r.characteristic;
    j["height"] = value_json(r.height);
    j["cd"] = value_json(r.cd);
    j["ara"] = value_json(r.ara);
    j["generic_comparison"] = r.generic_comparison;
    if (r.witness) {
        const WitnessSet& w = *r.witness;
        const RingPtr& ring = w.target.ring();
        ordered_json wj;
        wj["construction"] = construction_name(w.tag);
        wj["status"] = witness_status_name(w.status);
        wj["ring"] = ordered_json{{"vars", ring->vars()}, {"order", order_name(ring->order())}};
        wj["target"] = poly_strings(w.target.gens());
        wj["polynomials"] = poly_strings(w.polys);
        j["witness"] = std::move(wj);
    } else {
        j["witness"] = nullptr;
    }
    return j.dump(2);
}

Report report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::parse, "malformed report JSON");
    try {
        if (j.at("schema").get<int>() != 1) fail(ErrorKind::parse, "unsupported report schema");
        Report r;
        r.pattern = j.at("pattern").get<std::string>();
        r.columns = j.at("columns").get<size_t>();
        r.characteristic = j.at("characteristic").get<long>();
        r.height = value_from_json(j.at("height"));
        r.cd = value_from_json(j.at("cd"));
        r.ara = value_from_json(j.at("ara"));
        r.generic_comparison = j.at("generic_comparison").get<bool>();
        const ordered_json& wj = j.at("witness");
        if (!wj.is_null()) {
            Field f = r.characteristic == 0
                          ? Field::rationals()
                          : Field::prime(static_cast<uint64_t>(r.characteristic));
            auto order = order_from_name(wj.at("ring").at("order").get<std::string>());
            if (!order) fail(ErrorKind::parse, "unknown monomial order in report");
            RingPtr ring =
                Ring::make(wj.at("ring").at("vars").get<std::vector<std::string>>(), f, *order);
            r.witness = WitnessSet{
                construction_from_name(wj.at("construction").get<std::string>()),
                IdealPresentation(
                    ring, polys_from_strings(ring, wj.at("target").get<std::vector<std::string>>())),
                polys_from_strings(ring, wj.at("polynomials").get<std::vector<std::string>>()),
                witness_status_from_name(wj.at("status").get<std::string>())};
        }
        return r;
    } catch (const ordered_json::exception& e) {
        fail(ErrorKind::parse, std::string("malformed report JSON: ") + e.what());
    }
}

bool same_report(const Report& a, const Report& b) {
    auto same_value = [](const InvariantValue& x, const InvariantValue& y) {
        return x.value == y.value && x.status == y.status && x.citation == y.citation;
    };
    if (a.pattern != b.pattern || a.columns != b.columns ||
        a.characteristic != b.characteristic || a.generic_comparison != b.generic_comparison)
        return false;
    if (!same_value(a.height, b.height) || !same_value(a.cd, b.cd) || !same_value(a.ara, b.ara))
        return false;
    if (a.witness.has_value() != b.witness.has_value()) return false;
    if (!a.witness) return true;
    const WitnessSet& wa = *a.witness;
    const WitnessSet& wb = *b.witness;
    if (wa.tag != wb.tag || wa.status != wb.status) return false;
    if (!wa.target.ring()->same(*wb.target.ring())) return false;
    if (wa.target.gens() != wb.target.gens() || wa.polys != wb.polys) return false;
    return true;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "pattern:        " << r.pattern << "\n";
    os << "columns:        " << r.columns << "\n";
    os << "characteristic: " << r.characteristic << "\n";
    auto line = [&](const char* name, const InvariantValue& v) {
        os << name << v.value << "  [" << invariant_status_name(v.status) << "]\n";
        if (!v.citation.empty()) os << "    " << v.citation << "\n";
    };
    line("height: ", r.height);
    line("cd:     ", r.cd);
    line("ara:    ", r.ara);
    os << "ara below the generic 2n-3: " << (r.generic_comparison ? "yes" : "no") << "\n";
    if (r.witness) {
        const WitnessSet& w = *r.witness;
        os << "witness: " << construction_name(w.tag) << ", " << w.count() << " polynomial"
           << (w.count() == 1 ? "" : "s") << ", " << witness_status_name(w.status) << "\n";
        size_t i = 0;
        for (const Polynomial& p : w.polys) os << "  g" << ++i << " = " << p.str() << "\n";
    } else {
        os << "witness: none (value known without an attached construction)\n";
    }
    return os.str();
}

} // namespace minorkit
