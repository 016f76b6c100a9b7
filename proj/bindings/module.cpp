// Python bindings: block/matrix analysis returning plain dicts, plus direct
// access to the Groebner oracle. Errors surface as minorkit.MinorkitError
// with the kind spelled out in the message.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "minorkit/classify.hpp"
#include "minorkit/groebner.hpp"
#include "minorkit/parse.hpp"
#include "minorkit/pencil.hpp"
#include "minorkit/report.hpp"

namespace py = pybind11;
using namespace minorkit;

namespace {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::nonlinear_entry: return "nonlinear-entry";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::resource_cap: return "resource-cap";
    case ErrorKind::eigenvalues_not_in_field: return "eigenvalues-not-in-field";
    case ErrorKind::certificate: return "certificate";
    case ErrorKind::condition_violated: return "condition-violated";
    case ErrorKind::syzygy_invalid: return "syzygy-invalid";
    case ErrorKind::power_not_in_syzygy: return "power-not-in-syzygy";
    case ErrorKind::verification_failed: return "verification-failed";
    case ErrorKind::internal: return "internal";
    }
    return "internal";
}

py::object to_py(const nlohmann::ordered_json& j) {
    using oj = nlohmann::ordered_json;
    switch (j.type()) {
    case oj::value_t::null: return py::none();
    case oj::value_t::boolean: return py::bool_(j.get<bool>());
    case oj::value_t::number_integer: return py::int_(j.get<long long>());
    case oj::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case oj::value_t::number_float: return py::float_(j.get<double>());
    case oj::value_t::string: return py::str(j.get<std::string>());
    case oj::value_t::array: {
        py::list out;
        for (const auto& e : j) out.append(to_py(e));
        return out;
    }
    case oj::value_t::object: {
        py::dict out;
        for (const auto& item : j.items()) out[py::str(item.key())] = to_py(item.value());
        return out;
    }
    default: return py::none();
    }
}

Field field_for(long characteristic) {
    if (characteristic < 0) fail(ErrorKind::degenerate_input, "characteristic must be >= 0");
    return characteristic == 0 ? Field::rationals() : Field::prime(characteristic);
}

MonomialOrder order_for(const std::string& name) {
    auto o = order_from_name(name);
    if (!o) fail(ErrorKind::degenerate_input, "unknown monomial order: " + name);
    return *o;
}

py::object finish_report(Report r, const KWForm& form, bool verify, bool force_verify,
                         size_t max_verify_vars) {
    if (r.witness &&
        (force_verify || (verify && form.canonical.ring()->nvars() <= max_verify_vars)))
        verify_witness(*r.witness);
    return to_py(nlohmann::ordered_json::parse(report_to_json(r)));
}

py::object analyze_blocks(const std::string& blocks, long characteristic,
                          const std::string& order, bool verify, bool force_verify,
                          size_t max_verify_vars) {
    Field f = field_for(characteristic);
    KWForm form = kw_form_from_blocks(parse_block_tokens(blocks, f), f, order_for(order));
    return finish_report(analyze(form, characteristic), form, verify, force_verify,
                         max_verify_vars);
}

py::object analyze_matrix(const std::string& text, std::optional<long> characteristic,
                          const std::string& order, bool verify, bool force_verify,
                          size_t max_verify_vars) {
    std::optional<Field> f;
    if (characteristic) f = field_for(*characteristic);
    LinMatrix m = parse_matrix_text(text, f, order_for(order));
    KWForm form = kw_decompose(m);
    return finish_report(analyze(form, characteristic.value_or(0)), form, verify, force_verify,
                         max_verify_vars);
}

py::object decompose(const std::string& text, std::optional<long> characteristic,
                     const std::string& order) {
    std::optional<Field> f;
    if (characteristic) f = field_for(*characteristic);
    LinMatrix m = parse_matrix_text(text, f, order_for(order));
    KWForm form = kw_decompose(m);
    if (!verify_certificate(form, m))
        fail(ErrorKind::certificate, "decomposition certificate failed to check");
    KWInvariants inv = kw_invariants(form);
    nlohmann::ordered_json out;
    out["blocks"] = nlohmann::ordered_json::array();
    for (const auto& b : form.blocks) out["blocks"].push_back(b.token());
    out["fillers"] = form.fillers;
    nlohmann::ordered_json j;
    j["nilpotent_blocks"] = inv.c;
    j["nilpotent_lengths"] = inv.nilpotent_lengths;
    j["scroll_blocks"] = inv.g;
    j["scroll_lengths"] = inv.scroll_lengths;
    j["eigenvalue_classes"] = inv.d;
    j["largest_class"] = inv.gamma;
    j["jordan_blocks"] = inv.alpha;
    j["jordan_vars"] = inv.jordan_vars;
    j["columns"] = inv.columns;
    out["invariants"] = j;
    out["height"] = height_formula(inv);
    return to_py(out);
}

std::string render_text(const std::string& report_json) {
    return report_to_text(report_from_json(report_json));
}

struct ParsedIdeal {
    RingPtr ring;
    std::vector<Polynomial> polys;
};

ParsedIdeal parsed(const std::vector<std::string>& variables,
                   const std::vector<std::string>& polys, long characteristic,
                   const std::string& order) {
    RingPtr r = Ring::make(variables, field_for(characteristic), order_for(order));
    ParsedIdeal out{r, {}};
    for (const auto& s : polys) out.polys.push_back(parse_polynomial(r, s));
    return out;
}

GBLimits limits_for(size_t pair_cap, int degree_cap) { return GBLimits{pair_cap, degree_cap}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ideals of 2-minors of 2xn matrices of linear forms: normal forms, "
              "height/cd/ara classification, certified generator families";
    m.attr("__version__") = "0.1.0";

    static PyObject* exc =
        PyErr_NewException("minorkit._core.MinorkitError", PyExc_ValueError, nullptr);
    m.add_object("MinorkitError", py::reinterpret_borrow<py::object>(exc));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(exc, (std::string(kind_name(e.kind)) + ": " + e.what()).c_str());
        }
    });

    m.def("analyze_blocks", &analyze_blocks, py::arg("blocks"), py::arg("characteristic") = 0,
          py::arg("order") = "degrevlex", py::arg("verify") = true,
          py::arg("force_verify") = false, py::arg("max_verify_vars") = 12,
          "Classify the 2-minor ideal of a block spec such as \"N(2) J(1,2) B(2)\"; "
          "returns the report as a dict (schema 1).");
    m.def("analyze_matrix", &analyze_matrix, py::arg("text"),
          py::arg("characteristic") = py::none(), py::arg("order") = "degrevlex",
          py::arg("verify") = true, py::arg("force_verify") = false,
          py::arg("max_verify_vars") = 12,
          "Decompose a 'vars:' + two-row matrix text and classify its 2-minor ideal.");
    m.def("decompose", &decompose, py::arg("text"), py::arg("characteristic") = py::none(),
          py::arg("order") = "degrevlex",
          "Normal form of a matrix text: block tokens, invariants, and the height.");
    m.def("render_text", &render_text, py::arg("report_json"),
          "Format a schema-1 report JSON string the way the command line does.");

    m.def(
        "groebner_basis",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& generators,
           long characteristic, const std::string& order, size_t pair_cap, int degree_cap) {
            ParsedIdeal in = parsed(variables, generators, characteristic, order);
            GroebnerBasis gb = buchberger(IdealPresentation(in.ring, in.polys),
                                          limits_for(pair_cap, degree_cap));
            std::vector<std::string> out;
            for (const auto& g : gb.polys()) out.push_back(g.str());
            return out;
        },
        py::arg("variables"), py::arg("generators"), py::arg("characteristic") = 0,
        py::arg("order") = "degrevlex", py::arg("pair_cap") = 50000, py::arg("degree_cap") = 40,
        "Reduced Groebner basis, monic and auto-reduced, as polynomial strings.");
    m.def(
        "ideal_member",
        [](const std::vector<std::string>& variables, const std::string& f,
           const std::vector<std::string>& generators, long characteristic,
           const std::string& order, size_t pair_cap, int degree_cap) {
            ParsedIdeal in = parsed(variables, generators, characteristic, order);
            return ideal_member(parse_polynomial(in.ring, f),
                                IdealPresentation(in.ring, in.polys),
                                limits_for(pair_cap, degree_cap));
        },
        py::arg("variables"), py::arg("f"), py::arg("generators"), py::arg("characteristic") = 0,
        py::arg("order") = "degrevlex", py::arg("pair_cap") = 50000, py::arg("degree_cap") = 40);
    m.def(
        "radical_member",
        [](const std::vector<std::string>& variables, const std::string& f,
           const std::vector<std::string>& generators, long characteristic,
           const std::string& order, size_t pair_cap, int degree_cap) {
            ParsedIdeal in = parsed(variables, generators, characteristic, order);
            return radical_member(parse_polynomial(in.ring, f),
                                  IdealPresentation(in.ring, in.polys),
                                  limits_for(pair_cap, degree_cap));
        },
        py::arg("variables"), py::arg("f"), py::arg("generators"), py::arg("characteristic") = 0,
        py::arg("order") = "degrevlex", py::arg("pair_cap") = 50000, py::arg("degree_cap") = 40);
    m.def(
        "equal_radical",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& lhs,
           const std::vector<std::string>& rhs, long characteristic, const std::string& order,
           size_t pair_cap, int degree_cap) {
            ParsedIdeal a = parsed(variables, lhs, characteristic, order);
            std::vector<Polynomial> b;
            for (const auto& s : rhs) b.push_back(parse_polynomial(a.ring, s));
            return equal_radical(IdealPresentation(a.ring, a.polys),
                                 IdealPresentation(a.ring, b), limits_for(pair_cap, degree_cap));
        },
        py::arg("variables"), py::arg("lhs"), py::arg("rhs"), py::arg("characteristic") = 0,
        py::arg("order") = "degrevlex", py::arg("pair_cap") = 50000, py::arg("degree_cap") = 40,
        "Whether two generator lists cut out the same radical ideal.");
    m.def(
        "ideal_height",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& generators,
           long characteristic, const std::string& order, size_t pair_cap, int degree_cap) {
            ParsedIdeal in = parsed(variables, generators, characteristic, order);
            return ideal_height(IdealPresentation(in.ring, in.polys),
                                limits_for(pair_cap, degree_cap));
        },
        py::arg("variables"), py::arg("generators"), py::arg("characteristic") = 0,
        py::arg("order") = "degrevlex", py::arg("pair_cap") = 50000, py::arg("degree_cap") = 40);
}
