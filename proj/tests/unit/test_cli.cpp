#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "minorkit/parse.hpp"
#include "minorkit/report.hpp"
#include "minorkit/run.hpp"

using namespace minorkit;

namespace {

Report analyzed_blocks(const std::string& spec, const Field& f) {
    KWForm form = kw_form_from_blocks(parse_block_tokens(spec, f), f);
    return analyze(form, f.characteristic());
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const JobConfig& cfg) {
    std::ostringstream out, err;
    int code = run_job(cfg, out, err);
    return {code, out.str(), err.str()};
}

JobConfig blocks_config(const std::string& spec) {
    JobConfig cfg;
    cfg.input = JobConfig::Input::blocks;
    cfg.source = spec;
    cfg.output = JobConfig::Output::json;
    return cfg;
}

// scratch matrix file, removed on scope exit
struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("json reports round-trip") {
    Field q = Field::rationals();
    Field p = Field::prime(7);

    Report generic = analyzed_blocks("B(1) B(1) B(1)", q);
    REQUIRE(generic.witness.has_value());
    verify_witness(*generic.witness);
    Report scrolls = analyzed_blocks("B(2) B(1)", q); // no witness attached
    Report open = analyzed_blocks("B(2) J(3,1)", p);  // unknown cd, bounded ara

    for (const Report* r : {&generic, &scrolls, &open}) {
        std::string text = report_to_json(*r);
        Report back = report_from_json(text);
        CHECK(same_report(*r, back));
        CHECK(report_to_json(back) == text);
    }

    CHECK_THROWS_AS(report_from_json("{"), Error);
    CHECK_THROWS_AS(report_from_json("{\"schema\": 2}"), Error);
    CHECK_THROWS_AS(report_from_json("{\"schema\": 1}"), Error);
}

TEST_CASE("identical runs serialize identically") {
    RunResult a = run(blocks_config("J(0,1) B(1) B(1) J(1,1)"));
    RunResult b = run(blocks_config("J(0,1) B(1) B(1) J(1,1)"));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("pipeline on block specs") {
    JobConfig cfg = blocks_config("J(0,1) B(1) B(1) B(1) J(1,1)");
    cfg.characteristic = 0;
    RunResult res = run(cfg);
    REQUIRE(res.code == 0);
    Report r = report_from_json(res.out);
    CHECK(r.pattern == "a-n");
    CHECK(r.height.value == 4);
    CHECK(r.cd.value == 5);
    CHECK(r.ara.value == 5);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->status == WitnessStatus::verified);
    CHECK(r.witness->count() == 5);

    JobConfig gen = blocks_config("B(1) B(1) B(1) B(1) B(1)");
    gen.characteristic = 7;
    RunResult gres = run(gen);
    REQUIRE(gres.code == 0);
    Report g = report_from_json(gres.out);
    CHECK(g.characteristic == 7);
    CHECK(g.height.value == 4);
    CHECK(g.cd.value == 4);
    CHECK(g.ara.value == 7);
    CHECK(g.witness->status == WitnessStatus::verified);

    JobConfig txt = blocks_config("B(3)");
    txt.output = JobConfig::Output::text;
    RunResult tres = run(txt);
    CHECK(tres.code == 0);
    CHECK(tres.out.find("pattern:        scroll") != std::string::npos);
    CHECK(tres.out.find("witness: scroll-sci") != std::string::npos);
}

TEST_CASE("pipeline on matrix files") {
    TempFile golden("cli_golden_tmp.mtx",
                    "vars: x1 x2 x3 x4 x5 x6\n"
                    "x1+x6; x2; x2+x3; x4; x2+x6; x4\n"
                    "-x6; x1; x1-x3+x4; -x4+x5; x1-x6; -x4+x5+x6\n");
    JobConfig cfg;
    cfg.input = JobConfig::Input::matrix_file;
    cfg.source = golden.path;
    cfg.output = JobConfig::Output::json;
    RunResult res = run(cfg);
    REQUIRE(res.code == 0);
    Report r = report_from_json(res.out);
    CHECK(r.columns == 6);
    CHECK(r.height.value == 4);
    CHECK(r.pattern == "mixed-open+nilpotent");
    CHECK(r.witness.has_value());
    CHECK(r.witness->status == WitnessStatus::verified);

    TempFile single("cli_single_tmp.mtx", "vars: a\na;\n0;\n");
    JobConfig one;
    one.input = JobConfig::Input::matrix_file;
    one.source = single.path;
    RunResult ores = run(one);
    CHECK(ores.code == 0);
    CHECK(ores.out.find("zero-ideal") != std::string::npos);

    TempFile nonlinear("cli_nonlinear_tmp.mtx", "vars: a b\na*b; a\nb; a\n");
    JobConfig bad;
    bad.input = JobConfig::Input::matrix_file;
    bad.source = nonlinear.path;
    RunResult bres = run(bad);
    CHECK(bres.code == 1);
    CHECK(!bres.err.empty());

    JobConfig missing;
    missing.input = JobConfig::Input::matrix_file;
    missing.source = "cli_no_such_file.mtx";
    CHECK(run(missing).code == 1);

    TempFile irr("cli_irrational_tmp.mtx", "vars: x1 x2\nx1; x2\nx2; x1+x2\n");
    JobConfig irrc;
    irrc.input = JobConfig::Input::matrix_file;
    irrc.source = irr.path;
    RunResult ires = run(irrc);
    CHECK(ires.code == 4);
    CHECK(ires.err.find("eigenvalue") != std::string::npos);
}

TEST_CASE("verification control") {
    JobConfig cfg = blocks_config("B(1) B(1) B(1)");
    CHECK(report_from_json(run(cfg).out).witness->status == WitnessStatus::verified);

    cfg.verify = false;
    CHECK(report_from_json(run(cfg).out).witness->status == WitnessStatus::unverified);

    cfg.verify = true;
    cfg.max_verify_vars = 2; // ring has 6 variables: stays unverified
    CHECK(report_from_json(run(cfg).out).witness->status == WitnessStatus::unverified);

    cfg.force_verify = true; // cap no longer matters
    CHECK(report_from_json(run(cfg).out).witness->status == WitnessStatus::verified);

    cfg.force_verify = false;
    cfg.max_verify_vars = 12;
    cfg.limits.pair_cap = 1;
    CHECK(run(cfg).code == 3);
}

TEST_CASE("error kinds map to documented exit codes") {
    CHECK(exit_code_for(ErrorKind::verification_failed) == 2);
    CHECK(exit_code_for(ErrorKind::resource_cap) == 3);
    CHECK(exit_code_for(ErrorKind::eigenvalues_not_in_field) == 4);
    CHECK(exit_code_for(ErrorKind::parse) == 1);
    CHECK(exit_code_for(ErrorKind::degenerate_input) == 1);
    CHECK(exit_code_for(ErrorKind::internal) == 1);
}
