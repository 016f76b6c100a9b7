#include <doctest.h>

#include "minorkit/classify.hpp"
#include "minorkit/groebner.hpp"
#include "minorkit/parse.hpp"

using namespace minorkit;

namespace {

KWForm blocks_form(const std::string& spec, const Field& f) {
    return kw_form_from_blocks(parse_block_tokens(spec, f), f);
}

Report analyzed(const std::string& spec, const Field& f) {
    return analyze(blocks_form(spec, f), f.characteristic());
}

long block_height(const std::string& spec, const Field& f) {
    return height_formula(kw_invariants(blocks_form(spec, f)));
}

bool all_exact(const Report& r) {
    return r.height.status == InvariantStatus::exact && r.cd.status == InvariantStatus::exact &&
           r.ara.status == InvariantStatus::exact;
}

bool verified(Report& r) {
    REQUIRE(r.witness.has_value());
    return verify_witness(*r.witness);
}

} // namespace

TEST_CASE("height formula on block shapes") {
    Field q = Field::rationals();
    // two-zero-corner shapes: J(0,1) B(1)^{n-2} J(1,1) has height n-1
    CHECK(block_height("J(0,1) B(1) B(1) J(1,1)", q) == 3);
    CHECK(block_height("J(0,1) B(1) B(1) B(1) J(1,1)", q) == 4);
    CHECK(block_height("J(0,1) B(1) B(1) B(1) B(1) J(1,1)", q) == 5);
    // a single nilpotent block contributes its variable count
    CHECK(block_height("N(4)", q) == 3);
    CHECK(block_height("N(2)", q) == 1);
    // generic: n length-1 scrolls
    CHECK(block_height("B(1) B(1) B(1) B(1) B(1)", q) == 4);
    // nilpotent plus scrolls: variables plus lengths minus one
    CHECK(block_height("N(3) B(2) B(1)", q) == 4);
    // shared eigenvalues count through gamma
    CHECK(block_height("J(5,2) J(5,2)", q) == 2);
    CHECK(block_height("J(2,1) J(3,1)", q) == 1);
    CHECK(block_height("J(2,1) J(2,1)", q) == 0);
    CHECK(block_height("J(0,2) B(1)", q) == 2);
    CHECK_THROWS_AS(height_formula(KWInvariants{}), Error);
}

TEST_CASE("height formula agrees with Groebner heights") {
    Field q = Field::rationals();
    Field p = Field::prime(101);
    const char* specs[] = {
        "N(2)",           "N(3)",          "J(0,2)",       "J(1,1) J(2,1)",
        "J(2,1) J(2,1)",  "B(2)",          "B(1) B(1)",    "B(1) B(1) B(1)",
        "N(2) B(2)",      "B(2) B(1)",     "J(0,2) B(1)",  "N(2) J(3,2)",
        "J(1,2) J(1,1)",  "N(1) J(0,1) J(1,1)",            "J(0,1) B(1) J(1,1)",
    };
    for (const char* s : specs) {
        for (const Field& f : {q, p}) {
            KWForm form = blocks_form(s, f);
            IdealPresentation ideal(form.canonical.ring(), all_minors2(form.canonical));
            CAPTURE(s);
            CHECK(block_height(s, f) == ideal_height(ideal));
        }
    }
}

TEST_CASE("generic pencils") {
    Field q = Field::rationals();
    Report r = analyzed("B(1) B(1) B(1)", q);
    CHECK(r.pattern == "generic");
    CHECK(r.height.value == 2);
    CHECK(r.cd.value == 3);
    CHECK(r.ara.value == 3);
    CHECK(all_exact(r));
    CHECK(r.witness->count() == 3);
    CHECK(verified(r));
    CHECK_FALSE(r.generic_comparison);

    Field p = Field::prime(7);
    Report rp = analyzed("B(1) B(1) B(1) B(1)", p);
    CHECK(rp.pattern == "generic");
    CHECK(rp.height.value == 3);
    CHECK(rp.cd.value == 3);
    CHECK(rp.ara.value == 5);
    CHECK(all_exact(rp));
    CHECK(verified(rp));
    CHECK_FALSE(rp.generic_comparison);
}

TEST_CASE("scroll pencils") {
    Field q = Field::rationals();
    Report curve = analyzed("B(3)", q);
    CHECK(curve.pattern == "scroll");
    CHECK(curve.height.value == 2);
    CHECK(curve.cd.value == 2);
    CHECK(curve.ara.value == 2);
    CHECK(all_exact(curve));
    CHECK(curve.witness->count() == 2);
    CHECK(verified(curve));
    CHECK(curve.generic_comparison); // 2 < 2*3-3

    Field p = Field::prime(5);
    Report curvep = analyzed("B(3)", p);
    CHECK(all_exact(curvep));
    CHECK(curvep.ara.value == 2);
    CHECK(verified(curvep));

    Report uni = analyzed("B(2) B(1)", q);
    CHECK(uni.pattern == "scrolls");
    CHECK(uni.height.value == 2);
    CHECK(uni.cd.value == 2); // N-2 with N = 4
    CHECK(uni.ara.value == 2);
    CHECK(all_exact(uni));
    CHECK_FALSE(uni.witness.has_value()); // known value, no construction
    CHECK(uni.generic_comparison);

    Report unip = analyzed("B(2) B(1)", p);
    CHECK(unip.cd.value == 2); // falls back to the height in char p
    CHECK(unip.ara.value == 2);
    CHECK(all_exact(unip));
    CHECK(unip.generic_comparison);
}

TEST_CASE("two-zero-corner pencils") {
    Field q = Field::rationals();

    KWForm a4 = kw_decompose(zero_diagonal_matrix(4, q));
    Report r4 = analyze(a4, 0);
    CHECK(r4.pattern == "a-n");
    CHECK(r4.height.value == 3);
    CHECK(r4.cd.value == 3); // 2n-5
    CHECK(r4.ara.value == 3);
    CHECK(all_exact(r4));
    CHECK(r4.witness->count() == 3);
    CHECK(verified(r4));
    CHECK(r4.generic_comparison);

    // detection is independent of block order and eigenvalue values
    Report shuffled = analyzed("B(1) J(2,1) B(1) J(5,1)", q);
    CHECK(shuffled.pattern == "a-n");
    CHECK(shuffled.height.value == 3);
    CHECK(shuffled.ara.value == 3);
    CHECK(all_exact(shuffled));
    CHECK(verified(shuffled));

    KWForm a5 = kw_decompose(zero_diagonal_matrix(5, q));
    CHECK(verify_certificate(a5, zero_diagonal_matrix(5, q)));
    Report r5 = analyze(a5, 0);
    CHECK(r5.pattern == "a-n");
    CHECK(r5.height.value == 4);
    CHECK(r5.cd.value == 5);
    CHECK(r5.ara.value == 5);
    CHECK(all_exact(r5));
    CHECK(r5.witness->count() == 5);

    Field g5 = Field::prime(5);
    Report r6 = analyze(kw_decompose(zero_diagonal_matrix(6, g5)), 5);
    CHECK(r6.pattern == "a-n");
    CHECK(r6.height.value == 5);
    CHECK(r6.cd.value == 5); // perfect, so cd drops to the height
    CHECK(r6.cd.status == InvariantStatus::exact);
    CHECK(r6.ara.value == 7);
    CHECK(r6.ara.status == InvariantStatus::upper_bound);
    CHECK(r6.witness->count() == 7);
    CHECK(r6.generic_comparison); // 7 < 2*6-3

    Report r3 = analyze(kw_decompose(zero_diagonal_matrix(3, q)), 0);
    CHECK(r3.pattern == "a-n");
    CHECK(r3.height.value == 2);
    CHECK(r3.cd.value == 2);
    CHECK(r3.ara.value == 2);
    CHECK(all_exact(r3));
    CHECK(verified(r3));
    Field g7 = Field::prime(7);
    Report r3p = analyze(kw_decompose(zero_diagonal_matrix(3, g7)), 7);
    CHECK(all_exact(r3p));
    CHECK(r3p.ara.value == 2);
    CHECK(verified(r3p));

    CHECK_FALSE(an_normalization(blocks_form("B(1) B(1) B(1)", q)).has_value());
    CHECK_FALSE(an_normalization(blocks_form("J(0,1) J(1,1) B(2)", q)).has_value());
    CHECK_FALSE(an_normalization(blocks_form("J(0,1) J(1,1) J(2,1)", q)).has_value());
    CHECK(an_normalization(blocks_form("J(3,1) J(4,1) B(1)", q)).has_value());
}

TEST_CASE("jordan pencils") {
    Field q = Field::rationals();

    Report single = analyzed("J(5,3)", q);
    CHECK(single.pattern == "jordan-single");
    CHECK(single.height.value == 2);
    CHECK(single.cd.value == 2);
    CHECK(single.ara.value == 2);
    CHECK(all_exact(single));
    CHECK(verified(single));

    Report one_ev = analyzed("J(3,2) J(3,2)", q);
    CHECK(one_ev.pattern == "jordan-one-eigenvalue");
    CHECK(one_ev.height.value == 2);
    CHECK(one_ev.cd.value == 2); // N - alpha
    CHECK(one_ev.ara.value == 2);
    CHECK(all_exact(one_ev));
    CHECK(one_ev.witness->count() == 2);
    CHECK(verified(one_ev));

    Report multi = analyzed("J(0,1) J(1,1) J(2,1)", q);
    CHECK(multi.pattern == "jordan");
    CHECK(multi.height.value == 2);
    CHECK(multi.cd.value == 2); // N - 1
    CHECK(multi.ara.value == 2);
    CHECK(all_exact(multi));
    CHECK(verified(multi));
    CHECK(multi.generic_comparison);

    // same shape away from char 0: cd is open, ara only bounded above
    Field p = Field::prime(7);
    Report multip = analyzed("J(0,1) J(1,1) J(2,1)", p);
    CHECK(multip.pattern == "jordan");
    CHECK(multip.height.value == 2);
    CHECK(multip.cd.status == InvariantStatus::unknown);
    CHECK(multip.cd.value == 3); // top of the bracket
    CHECK(multip.ara.status == InvariantStatus::upper_bound);
    CHECK(multip.ara.value == 3);
    CHECK(multip.witness->count() == 3);
    CHECK(verified(multip));
    CHECK_FALSE(multip.generic_comparison); // 3 = 2n-3 exactly
}

TEST_CASE("mixed 2x3 pencils over the rationals") {
    Field q = Field::rationals();

    Report a = analyzed("B(2) J(3,1)", q);
    CHECK(a.pattern == "two-by-three");
    CHECK(a.height.value == 2);
    CHECK(a.cd.value == 2);
    CHECK(a.ara.value == 2);
    CHECK(all_exact(a));
    CHECK_FALSE(a.witness.has_value());
    CHECK(a.generic_comparison);

    Report b = analyzed("B(1) J(2,2)", q);
    CHECK(b.pattern == "two-by-three");
    CHECK(b.height.value == 2);
    CHECK(b.cd.value == 2);
    CHECK(b.ara.value == 2);
    CHECK(all_exact(b));
    CHECK(b.witness->count() == 2);
    CHECK(verified(b));

    // two length-1 blocks sharing an eigenvalue: height drops to 1 but the
    // two minors still cannot be replaced by one polynomial
    Report c = analyzed("J(4,1) J(4,1) B(1)", q);
    CHECK(c.pattern == "two-by-three");
    CHECK(c.height.value == 1);
    CHECK(c.cd.status == InvariantStatus::unknown);
    CHECK(c.cd.value == 2);
    CHECK(c.ara.value == 2);
    CHECK(c.ara.status == InvariantStatus::exact);
    CHECK(c.witness->count() == 2);
    CHECK(verified(c));
    CHECK(c.generic_comparison);

    Report d = analyzed("B(1) B(1) J(1,1)", q);
    CHECK(d.pattern == "two-by-three");
    CHECK(d.height.value == 2);
    CHECK(d.cd.value == 2);
    CHECK(d.ara.value == 2);
    CHECK(all_exact(d));
    CHECK_FALSE(d.witness.has_value());
    CHECK(d.generic_comparison);

    // away from char 0 these rows are not covered: specialized sums only
    Field p = Field::prime(7);
    Report ap = analyzed("B(2) J(3,1)", p);
    CHECK(ap.pattern == "mixed-open");
    CHECK(ap.height.value == 2);
    CHECK(ap.cd.status == InvariantStatus::unknown);
    CHECK(ap.ara.status == InvariantStatus::upper_bound);
    CHECK(ap.ara.value == 3);
    CHECK(verified(ap));
    CHECK_FALSE(ap.generic_comparison);
}

TEST_CASE("principal pencils") {
    Field q = Field::rationals();
    Report r = analyzed("J(0,1) J(1,1)", q);
    CHECK(r.pattern == "principal");
    CHECK(r.height.value == 1);
    CHECK(r.cd.value == 1);
    CHECK(r.ara.value == 1);
    CHECK(all_exact(r));
    CHECK(r.witness->count() == 1);
    CHECK(verified(r));
    CHECK_FALSE(r.generic_comparison); // 1 = 2n-3 for n = 2

    Field p = Field::prime(2);
    Report rp = analyzed("B(2)", p);
    CHECK(rp.pattern == "principal");
    CHECK(all_exact(rp));
    CHECK(rp.ara.value == 1);
    CHECK(verified(rp));
}

TEST_CASE("nilpotent extensions") {
    Field q = Field::rationals();

    Report js = analyzed("N(3) J(5,3)", q);
    CHECK(js.pattern == "jordan-single+nilpotent");
    CHECK(js.height.value == 4);
    CHECK(js.cd.value == 4);
    CHECK(js.ara.value == 4);
    CHECK(all_exact(js));
    CHECK(js.witness->count() == 4);
    CHECK(verified(js));

    Report pr = analyzed("N(2) J(0,2)", q);
    CHECK(pr.pattern == "principal+nilpotent");
    CHECK(pr.height.value == 2);
    CHECK(pr.ara.value == 2);
    CHECK(all_exact(pr));
    CHECK(verified(pr));

    // a zero column changes nothing but the pattern tag
    Report sc = analyzed("N(1) B(2) B(1)", q);
    CHECK(sc.pattern == "scrolls+nilpotent");
    CHECK(sc.height.value == 2);
    CHECK(sc.cd.value == 2);
    CHECK(sc.ara.value == 2);
    CHECK(all_exact(sc));
    CHECK_FALSE(sc.witness.has_value());

    // char p: the generic sub-shape has cd < ara, so the extension can only
    // report an upper bound for ara
    Field p = Field::prime(7);
    Report gen = analyzed("N(2) B(1) B(1) B(1)", p);
    CHECK(gen.pattern == "generic+nilpotent");
    CHECK(gen.height.value == 3);
    CHECK(gen.cd.value == 3);
    CHECK(gen.cd.status == InvariantStatus::exact);
    CHECK(gen.ara.value == 4);
    CHECK(gen.ara.status == InvariantStatus::upper_bound);
    CHECK(gen.witness->count() == 4);
    CHECK(verified(gen));

    Report an = analyzed("N(2) J(0,1) J(1,1) B(1) B(1)", q);
    CHECK(an.pattern == "a-n+nilpotent");
    CHECK(an.height.value == 4);
    CHECK(an.cd.value == 4);
    CHECK(an.ara.value == 4);
    CHECK(all_exact(an));
    CHECK(an.witness->count() == 4);
    CHECK(verified(an));
}

TEST_CASE("mixed shapes fall back to specialized sums") {
    Field q = Field::rationals();
    Report r = analyzed("J(0,2) B(2)", q);
    CHECK(r.pattern == "mixed-open");
    CHECK(r.height.value == 3);
    CHECK(r.height.status == InvariantStatus::exact);
    CHECK(r.cd.status == InvariantStatus::unknown);
    CHECK(r.cd.value == 5);
    CHECK(r.ara.status == InvariantStatus::upper_bound);
    CHECK(r.ara.value == 5);
    CHECK(r.witness->count() == 5);
    CHECK(verified(r));
    CHECK_FALSE(r.generic_comparison); // bound matches 2n-3
}

TEST_CASE("zero ideals") {
    Field q = Field::rationals();
    Report z = analyzed("N(1) N(1) N(1)", q);
    CHECK(z.pattern == "zero-ideal");
    CHECK(z.height.value == 0);
    CHECK(z.cd.value == 0);
    CHECK(z.ara.value == 0);
    CHECK(all_exact(z));
    CHECK(z.witness->count() == 0);
    CHECK(z.generic_comparison); // 0 < 2*3-3

    KWForm sf = blocks_form("J(2,1) J(2,1)", q);
    Report same = analyze(sf, 0);
    CHECK(same.pattern == "zero-ideal");
    CHECK(all_minors2(sf.canonical).empty());
}

TEST_CASE("comparison flag needs an ara value") {
    Report r;
    r.ara = InvariantValue{4, InvariantStatus::unknown, ""};
    CHECK_THROWS_AS(question1_flag(r, 4), Error);
    r.ara.status = InvariantStatus::lower_bound;
    CHECK_THROWS_AS(question1_flag(r, 4), Error);
    r.ara.status = InvariantStatus::upper_bound;
    CHECK(question1_flag(r, 4));
    r.ara.value = 5;
    CHECK_FALSE(question1_flag(r, 4));
}

TEST_CASE("characteristic must match the field") {
    Field q = Field::rationals();
    Field p = Field::prime(7);
    KWForm fq = blocks_form("B(1) B(1)", q);
    KWForm fp = blocks_form("B(1) B(1)", p);
    CHECK_THROWS_AS(analyze(fq, 7), Error);
    CHECK_THROWS_AS(analyze(fp, 0), Error);
    CHECK_THROWS_AS(analyze(fq, 4), Error);
    CHECK_THROWS_AS(analyze(fq, -1), Error);
    CHECK(analyze(fp, 7).pattern == "principal");
}

TEST_CASE("classification sweep invariants") {
    Field q = Field::rationals();
    Field p = Field::prime(7);
    const char* specs[] = {
        "N(2)",
        "N(3) N(1)",
        "J(0,2)",
        "J(1,1) J(2,1)",
        "J(4,2) J(4,1)",
        "B(3)",
        "B(1) B(1)",
        "B(2) B(1)",
        "N(2) B(1) B(1)",
        "N(1) J(0,1) J(1,1) B(1)",
        "J(0,2) B(1)",
        "N(2) J(3,3)",
        "N(2) B(2) J(0,2)",
    };
    for (const char* s : specs) {
        CAPTURE(s);
        Report rq = analyzed(s, q);
        Report rp = analyzed(s, p);
        // characteristic can change cd and ara but never the height
        CHECK(rq.height.value == rp.height.value);
        for (Report* r : {&rq, &rp}) {
            CHECK(r->height.status == InvariantStatus::exact);
            if (all_exact(*r)) {
                CHECK(r->height.value <= r->cd.value);
                CHECK(r->cd.value <= r->ara.value);
            }
            if (r->witness) {
                CHECK(static_cast<long>(r->witness->count()) == r->ara.value);
                CHECK(verify_witness(*r->witness));
                CHECK(r->witness->status == WitnessStatus::verified);
            }
        }
    }
}
