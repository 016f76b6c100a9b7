#include "minorkit/run.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "minorkit/parse.hpp"
#include "minorkit/report.hpp"

namespace minorkit {

namespace {

Field field_for(long characteristic) {
    if (characteristic == 0) return Field::rationals();
    if (characteristic < 0) fail(ErrorKind::degenerate_input, "negative characteristic");
    return Field::prime(static_cast<uint64_t>(characteristic));
}

KWForm load_form(const JobConfig& cfg) {
    if (cfg.input == JobConfig::Input::blocks) {
        Field f = field_for(cfg.characteristic.value_or(0));
        return kw_form_from_blocks(parse_block_tokens(cfg.source, f), f, cfg.order);
    }
    std::ifstream in(cfg.source);
    if (!in) fail(ErrorKind::parse, "cannot open '" + cfg.source + "'");
    std::stringstream text;
    text << in.rdbuf();
    std::optional<Field> cli_field;
    if (cfg.characteristic) cli_field = field_for(*cfg.characteristic);
    return kw_decompose(parse_matrix_text(text.str(), cli_field, cfg.order));
}

} // namespace

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::verification_failed: return 2;
        case ErrorKind::resource_cap: return 3;
        case ErrorKind::eigenvalues_not_in_field: return 4;
        default: return 1;
    }
}

int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        KWForm form = load_form(cfg);
        Report r = analyze(form, form.canonical.ring()->field().characteristic());
        bool witness_failed = false;
        if (r.witness) {
            size_t nv = r.witness->target.ring()->nvars();
            if (cfg.force_verify || (cfg.verify && nv <= cfg.max_verify_vars))
                witness_failed = !verify_witness(*r.witness, cfg.limits);
        }
        if (cfg.output == JobConfig::Output::json)
            out << report_to_json(r) << "\n";
        else
            out << report_to_text(r);
        if (witness_failed) {
            err << "witness verification failed\n";
            return 2;
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind);
    }
}

} // namespace minorkit
