#include "minorkit/classify.hpp"

#include <algorithm>
#include <sstream>

#include "minorkit/groebner.hpp"

namespace minorkit {

namespace {

// Literature anchors attached to every reported value. Results that only
// hold in one characteristic say so here rather than in the dispatch code.
const char* kHeightCite =
    "\"height of the 2-minor ideal of a normal-form pencil\" (Nasrollah Nejad-Zaare-Nahandi, "
    "Prop. 2.2; gamma = maximum number of Jordan blocks sharing an eigenvalue)";
const char* kZeroCite = "\"every pair of columns is dependent\": the 2-minor ideal is (0)";
const char* kPrincipalCite = "\"a 2x2 pencil has principal 2-minor ideal\"; cd = ara = 1 when nonzero";
const char* kNilpotentCite =
    "\"sqrt(I2(N)) = (x_1,...,x_v)\": square and consecutive-column minors expose every "
    "nilpotent-block variable, a complete intersection on a linear space";
const char* kScrollCurveCite =
    "\"the rational normal curve is a set-theoretic complete intersection\" on the power sums "
    "F_1,...,F_{l-1} (Robbiano-Valla)";
const char* kJordanSingleCite =
    "\"subtracting lambda times the first row leaves sqrt(I) = (y_1,...,y_{m-1})\", a complete "
    "intersection on a linear space";
const char* kGenericAraCite =
    "\"ara(I_t(X)) = mn - t^2 + 1\" for the generic matrix (Bruns-Schwaenzl): 2n-3 here";
const char* kGenericCd0Cite =
    "char 0: \"cd = ara = 2n-3\" for the generic 2xn matrix (Bruns-Schwaenzl; cf. Witt's "
    "computation of the local cohomology)";
const char* kCharPPerfectCite =
    "char p: \"H^i_I(R) = 0 for i > height(I)\" for perfect ideals (Peskine-Szpiro, Prop. 4.1), "
    "so cd = ht";
const char* kScrollAraCite =
    "\"the arithmetical rank of a rational normal scroll is N-2\" (Badescu-Valla; the "
    "Grothendieck-Lefschetz lower bound is field-independent)";
const char* kScrollCd0Cite =
    "char 0: \"Pic = Z x Z injects into H^2_sing\" for a scroll, blocking cd < N-2; with "
    "Badescu-Valla's upper bound, cd = ara = N-2";
const char* kJordanVarsCite =
    "\"sqrt(I) is generated by the N - alpha non-terminal block variables\" when every block "
    "shares one eigenvalue";
const char* kJordanCd0Cite =
    "char 0: the radical splits as non-terminal variables plus the edge ideal of a complete "
    "multipartite graph; \"cd = pd = alpha - 1\" for that edge ideal (Jacques), total N-1";
const char* kJordanAra0Cite =
    "char 0: Schmitt-Vogel sums along the antidiagonals of the last-variable product matrix "
    "give alpha - 1 polynomials on top of the N - alpha variables";
const char* kAnCd0Cite =
    "char 0: \"H^i is nonzero only at n-1 and 2n-5\" for the two-zero-corner matrix, by "
    "multiplication maps from the one-zero generic case (Witt; Lyubeznik-Singh-Walther)";
const char* kAnAraAnyCite =
    "\"2n-5 generators up to radical over any commutative ring\": poset level sums glued to "
    "Schmitt-Vogel monomial sums";
const char* kAnCharPCite =
    "char p: perfect of height n-1 (Eagon-Northcott resolution), so \"cd = ht\" "
    "(Peskine-Szpiro, Prop. 4.1)";
const char* kA3Cite =
    "the three minors are monomial; two Schmitt-Vogel sums generate up to radical and "
    "\"cd = ara = 2\" (Huneke-Katz-Marley bound; Barile, Example 2)";
const char* kValla2x3Cite =
    "\"a special case of Valla's set-theoretic complete intersections of minors\" (Valla, "
    "Thm. 2.1): ht = cd = ara = 2, assuming the coefficients contain the rationals";
const char* kBarile2x3Cite =
    "\"one zero entry: two polynomials generate up to radical\" (Barile, Example 2): "
    "ara = 2 = ht = cd, assuming the coefficients contain the rationals";
const char* kMonomial2x3Cite =
    "after one row operation the ideal is generated by two products of linear forms "
    "(a Schmitt-Vogel pair)";
const char* kFallbackAraCite =
    "column-wise specialization of the generic poset level sums (Bruns-Schwaenzl): ring maps "
    "preserve radical-generation identities, so the nonzero specialized sums still generate "
    "up to radical";
const char* kNilExtCdCite = "appending nilpotent blocks shifts cd by exactly their variable count";
const char* kNilExtAraCite = "appending nilpotent blocks adds their variables to any radical "
                             "generating set";

InvariantValue exact(long v, std::string cite) {
    return InvariantValue{v, InvariantStatus::exact, std::move(cite)};
}

InvariantValue upper(long v, std::string cite) {
    return InvariantValue{v, InvariantStatus::upper_bound, std::move(cite)};
}

// unknown status; `top` is the best upper end, the bracket lives in the text
InvariantValue open_bracket(long ht, long top, const std::string& why) {
    std::ostringstream os;
    os << "open: " << ht << " = ht <= cd <= " << top << "; " << why;
    return InvariantValue{top, InvariantStatus::unknown, os.str()};
}

IdealPresentation minor_target(const KWForm& form) {
    return IdealPresentation(form.canonical.ring(), all_minors2(form.canonical));
}

WitnessSet make_witness(Construction tag, const KWForm& form, std::vector<Polynomial> polys) {
    return WitnessSet{tag, minor_target(form), std::move(polys)};
}

// variable offset of each block inside the canonical ring, in block order
std::vector<size_t> block_offsets(const KWForm& form) {
    std::vector<size_t> off;
    size_t at = 0;
    for (const Block& b : form.blocks) {
        off.push_back(at);
        at += b.vars;
    }
    return off;
}

// specialization of the generic poset sums to this matrix, zero sums dropped
std::vector<Polynomial> nonzero_poset_levels(const LinMatrix& m) {
    std::vector<Polynomial> out;
    for (const Polynomial& p : bruns_poset_polys(m).polys)
        if (!p.is_zero()) out.push_back(p);
    return out;
}

struct Ctx {
    const KWForm& form;
    const KWInvariants& inv;
    long ht;
    long chr;
    RingPtr ring;
    MonomialOrder order;
    size_t n;
};

Report base_report(const Ctx& c, std::string pattern) {
    Report r;
    r.pattern = std::move(pattern);
    r.height = exact(c.ht, kHeightCite);
    r.characteristic = c.chr;
    r.columns = c.n;
    return r;
}

// ht = cd = ara with one shared citation
Report sci_report(const Ctx& c, std::string pattern, long value, const std::string& cite) {
    Report r = base_report(c, std::move(pattern));
    r.cd = exact(value, cite);
    r.ara = exact(value, cite);
    return r;
}

// cd unknown inside [ht, k], ara <= k via the specialized poset sums
Report open_report(const Ctx& c, std::string pattern) {
    Report r = base_report(c, std::move(pattern));
    std::vector<Polynomial> polys = nonzero_poset_levels(c.form.canonical);
    long k = static_cast<long>(polys.size());
    r.ara = upper(k, kFallbackAraCite);
    r.cd = open_bracket(c.ht, k, "no theorem covers this shape in this characteristic");
    r.witness = make_witness(Construction::bruns_poset, c.form, std::move(polys));
    return r;
}

Report scroll_rows(const Ctx& c) {
    const KWInvariants& inv = c.inv;
    long sum_l = 0;
    for (size_t l : inv.scroll_lengths) sum_l += static_cast<long>(l);
    if (inv.g == 1) {
        long l = sum_l;
        Report r = sci_report(c, "scroll", l - 1, kScrollCurveCite);
        WitnessSet base = scroll_sci(static_cast<int>(l) - 1, c.ring->field(), c.order);
        std::vector<size_t> varmap(static_cast<size_t>(l) + 1);
        for (size_t i = 0; i < varmap.size(); ++i) varmap[i] = i;
        std::vector<Polynomial> polys;
        for (const Polynomial& p : base.polys) polys.push_back(p.map_ring(c.ring, varmap));
        r.witness = make_witness(Construction::scroll_sci, c.form, std::move(polys));
        return r;
    }
    bool generic = std::all_of(inv.scroll_lengths.begin(), inv.scroll_lengths.end(),
                               [](size_t l) { return l == 1; });
    if (generic) {
        Report r = base_report(c, "generic");
        long v = 2 * static_cast<long>(c.n) - 3;
        r.ara = exact(v, kGenericAraCite);
        r.cd = c.chr == 0 ? exact(v, kGenericCd0Cite) : exact(c.ht, kCharPPerfectCite);
        WitnessSet w = bruns_poset_polys(c.form.canonical);
        if (static_cast<long>(w.polys.size()) != v)
            fail(ErrorKind::internal, "generic poset sums have the wrong count");
        r.witness = std::move(w);
        return r;
    }
    Report r = base_report(c, "scrolls");
    long big_n = sum_l + static_cast<long>(inv.g) - 1; // variables minus one
    r.ara = exact(big_n - 2, kScrollAraCite);
    r.cd = c.chr == 0 ? exact(big_n - 2, kScrollCd0Cite) : exact(c.ht, kCharPPerfectCite);
    return r; // the N-2 scroll generators are not constructed here: value without witness
}

Report jordan_rows(const Ctx& c) {
    const KWInvariants& inv = c.inv;
    long nvars = static_cast<long>(inv.jordan_vars);
    if (inv.alpha == 1) {
        Report r = sci_report(c, "jordan-single", nvars - 1, kJordanSingleCite);
        r.witness = jordan_generators(c.form);
        return r;
    }
    std::string pattern = inv.d == 1 ? "jordan-one-eigenvalue" : "jordan";
    if (c.chr != 0) return open_report(c, std::move(pattern));
    Report r = base_report(c, pattern);
    long v = inv.d == 1 ? nvars - static_cast<long>(inv.alpha) : nvars - 1;
    r.cd = exact(v, inv.d == 1 ? kJordanVarsCite : kJordanCd0Cite);
    r.ara = exact(v, inv.d == 1 ? kJordanVarsCite : kJordanAra0Cite);
    r.witness = jordan_generators(c.form);
    return r;
}

Report an_rows(const Ctx& c, const ANNormalization& nrm) {
    const Field field = c.ring->field();
    size_t n = c.n;
    Report r = base_report(c, "a-n");
    if (n == 3) {
        // minors of the standard shape are x1x3, x2x3, x2x4; pair them as
        // {x2x3} and {x1x3, x2x4}
        RingPtr std_ring = zero_diagonal_matrix(3, field, c.order).ring();
        auto v = [&](size_t i) { return Polynomial::variable(std_ring, i); };
        SVPartition part{{{v(1) * v(2)}, {v(0) * v(2), v(1) * v(3)}}, {}};
        WitnessSet qs = schmitt_vogel(part);
        std::vector<Polynomial> polys;
        for (const Polynomial& p : qs.polys) polys.push_back(p.substitute_linear(nrm.std_images));
        r.cd = exact(2, kA3Cite);
        r.ara = exact(2, kA3Cite);
        r.witness = make_witness(Construction::an_kn, c.form, std::move(polys));
        return r;
    }
    long v = 2 * static_cast<long>(n) - 5;
    WitnessSet kn = an_generators(static_cast<int>(n), field, c.order);
    std::vector<Polynomial> polys;
    for (const Polynomial& p : kn.polys) polys.push_back(p.substitute_linear(nrm.std_images));
    r.witness = make_witness(Construction::an_kn, c.form, std::move(polys));
    if (c.chr == 0) {
        r.cd = exact(v, kAnCd0Cite);
        r.ara = exact(v, std::string(kAnCd0Cite) + "; " + kAnAraAnyCite);
    } else {
        r.cd = exact(c.ht, kAnCharPCite);
        r.ara = upper(v, kAnAraAnyCite);
    }
    return r;
}

Report two_by_three_rows(const Ctx& c) {
    const KWInvariants& inv = c.inv;
    std::vector<size_t> off = block_offsets(c.form);
    auto var = [&](size_t i) { return Polynomial::variable(c.ring, i); };
    if (inv.g == 1 && inv.scroll_lengths[0] == 2 && inv.alpha == 1)
        return sci_report(c, "two-by-three", 2, kValla2x3Cite);
    if (inv.g == 2 && inv.alpha == 1)
        return sci_report(c, "two-by-three", 2, kBarile2x3Cite);
    if (inv.g == 1 && inv.scroll_lengths[0] == 1 && inv.alpha == 1 && inv.jordan_vars == 2) {
        // one length-2 Jordan block J(lambda) and one length-1 scroll:
        // sqrt(I) = (y1, y2 (z1 - lambda z0))
        size_t jb = 0, sb = 0;
        for (size_t i = 0; i < c.form.blocks.size(); ++i)
            (c.form.blocks[i].kind == BlockKind::jordan ? jb : sb) = i;
        FieldElem lam = *c.form.blocks[jb].eigenvalue;
        Polynomial tail = var(off[sb] + 1) - var(off[sb]).scaled(lam);
        Report r = sci_report(c, "two-by-three", 2, kMonomial2x3Cite);
        r.witness = make_witness(Construction::schmitt_vogel, c.form,
                                 {var(off[jb]), var(off[jb] + 1) * tail});
        return r;
    }
    if (inv.g == 1 && inv.alpha == 2 && inv.d == 1) {
        // two length-1 Jordan blocks with one shared eigenvalue and a scroll:
        // I = (u t, w t) with t = z1 - lambda z0, so ht = 1 but ara = 2
        Report r = base_report(c, "two-by-three");
        std::vector<Polynomial> minors = all_minors2(c.form.canonical);
        if (minors.size() != 2) fail(ErrorKind::internal, "shared-eigenvalue 2x3 needs 2 minors");
        r.ara = exact(2, kMonomial2x3Cite);
        r.cd = open_bracket(c.ht, 2, "the radical splits as a hyperplane and a codimension-2 "
                                     "linear space");
        r.witness = make_witness(Construction::schmitt_vogel, c.form, std::move(minors));
        return r;
    }
    fail(ErrorKind::internal, "unclassified 2x3 shape");
}

// strip the nilpotent blocks, classify the rest, and put them back
Report strip_nilpotents(const Ctx& c) {
    const KWForm& form = c.form;
    std::vector<Block> rest;
    std::vector<size_t> submap;   // sub-ring index -> canonical index
    std::vector<size_t> nil_vars; // canonical indices of nilpotent variables
    std::vector<size_t> off = block_offsets(form);
    for (size_t i = 0; i < form.blocks.size(); ++i) {
        const Block& b = form.blocks[i];
        if (b.kind == BlockKind::nilpotent) {
            for (size_t k = 0; k < b.vars; ++k) nil_vars.push_back(off[i] + k);
        } else {
            rest.push_back(b);
            for (size_t k = 0; k < b.vars; ++k) submap.push_back(off[i] + k);
        }
    }
    KWForm sub = kw_form_from_blocks(rest, c.ring->field(), c.order);
    Report sr = analyze(sub, c.chr);
    long v = static_cast<long>(nil_vars.size());
    if (sr.height.value + v != c.ht)
        fail(ErrorKind::internal, "nilpotent strip disagrees with the height formula");

    Report r = base_report(c, sr.pattern + "+nilpotent");
    if (v == 0) {
        r.cd = sr.cd;
        r.ara = sr.ara;
    } else {
        r.cd = sr.cd;
        r.cd.value += v;
        r.cd.citation += std::string("; ") + kNilExtCdCite;
        bool squeezed = sr.cd.status == InvariantStatus::exact &&
                        sr.ara.status == InvariantStatus::exact && sr.cd.value == sr.ara.value;
        r.ara = sr.ara;
        r.ara.value += v;
        if (sr.ara.status == InvariantStatus::exact && !squeezed)
            r.ara.status = InvariantStatus::upper_bound;
        r.ara.citation += std::string("; ") + kNilExtAraCite;
    }
    if (sr.witness) {
        std::vector<Polynomial> polys;
        for (const Polynomial& p : sr.witness->polys) polys.push_back(p.map_ring(c.ring, submap));
        for (size_t i : nil_vars) polys.push_back(Polynomial::variable(c.ring, i));
        r.witness = make_witness(Construction::nilpotent_extend, form, std::move(polys));
    }
    return r;
}

} // namespace

std::string invariant_status_name(InvariantStatus s) {
    switch (s) {
        case InvariantStatus::exact: return "exact";
        case InvariantStatus::upper_bound: return "upper-bound";
        case InvariantStatus::lower_bound: return "lower-bound";
        case InvariantStatus::unknown: return "unknown";
    }
    fail(ErrorKind::internal, "unnamed invariant status");
}

long height_formula(const KWInvariants& inv) {
    if (inv.c + inv.d + inv.g == 0)
        fail(ErrorKind::degenerate_input, "height needs at least one block");
    long nil = 0;
    for (size_t len : inv.nilpotent_lengths) nil += static_cast<long>(len) - 1;
    if (inv.d == 0 && inv.g == 0) return nil;
    long scroll = 0;
    for (size_t l : inv.scroll_lengths) scroll += static_cast<long>(l);
    if (inv.d == 0) return nil + scroll - 1;
    return nil + scroll + static_cast<long>(inv.jordan_vars) - static_cast<long>(inv.gamma);
}

std::optional<ANNormalization> an_normalization(const KWForm& form) {
    KWInvariants inv = kw_invariants(form);
    if (inv.c != 0 || inv.d != 2 || inv.alpha != 2 || inv.jordan_vars != 2) return std::nullopt;
    for (size_t l : inv.scroll_lengths)
        if (l != 1) return std::nullopt;
    size_t n = inv.columns;

    RingPtr ring = form.canonical.ring();
    const Field field = ring->field();
    size_t s = ring->nvars();
    size_t block_vars = inv.block_vars;
    std::vector<size_t> off = block_offsets(form);

    // locate the two Jordan variables (and columns) and the scroll pairs
    size_t u_var = 0, w_var = 0, u_col = 0, w_col = 0;
    FieldElem mu1 = FieldElem::zero(field), mu2 = mu1;
    std::vector<std::pair<size_t, size_t>> scroll_vars; // (z0, z1) per scroll
    std::vector<size_t> scroll_cols;
    bool first_jordan = true;
    size_t col = 0;
    for (size_t i = 0; i < form.blocks.size(); ++i) {
        const Block& b = form.blocks[i];
        if (b.kind == BlockKind::jordan) {
            if (first_jordan) {
                u_var = off[i];
                u_col = col;
                mu1 = *b.eigenvalue;
                first_jordan = false;
            } else {
                w_var = off[i];
                w_col = col;
                mu2 = *b.eigenvalue;
            }
        } else {
            scroll_vars.push_back({off[i], off[i] + 1});
            scroll_cols.push_back(col);
        }
        col += b.columns();
    }
    if (mu1.cmp(mu2) > 0) {
        std::swap(u_var, w_var);
        std::swap(u_col, w_col);
        std::swap(mu1, mu2);
    }
    FieldElem delta = mu2 - mu1;
    FieldElem inv_delta = delta.inv();

    // target shape: eigenvalues 0 and 1, scrolls unchanged
    std::vector<Block> blocks;
    blocks.push_back(jordan_block(FieldElem::zero(field), 1));
    blocks.push_back(jordan_block(FieldElem::one(field), 1));
    for (size_t p = 0; p + 2 < n; ++p) blocks.push_back(scroll_block(1));
    size_t fillers = s - block_vars;
    LinMatrix canon = assemble_blocks(blocks, field, ring->order(), fillers);

    la::Mat C{{FieldElem::one(field), FieldElem::zero(field)},
              {-mu1 * inv_delta, inv_delta}};
    la::Mat Cp(n, la::Vec(n, FieldElem::zero(field)));
    Cp[u_col][0] = FieldElem::one(field);
    Cp[w_col][1] = FieldElem::one(field);
    for (size_t p = 0; p < scroll_cols.size(); ++p)
        Cp[scroll_cols[p]][2 + p] = FieldElem::one(field);
    la::Mat V(s, la::Vec(s, FieldElem::zero(field)));
    V[u_var][0] = FieldElem::one(field);
    V[w_var][1] = FieldElem::one(field);
    for (size_t p = 0; p < scroll_vars.size(); ++p) {
        size_t s0 = 2 + 2 * p, s1 = 3 + 2 * p;
        V[scroll_vars[p].first][s0] = FieldElem::one(field);
        V[scroll_vars[p].second][s0] = mu1;
        V[scroll_vars[p].second][s1] = delta;
    }
    for (size_t t = block_vars; t < s; ++t) V[t][t] = FieldElem::one(field);

    KWForm normal{blocks, canon, ring, Certificate{C, Cp, V}, fillers};
    if (!verify_certificate(normal, form.canonical))
        fail(ErrorKind::internal, "eigenvalue normalization certificate failed");

    // images of the standard two-zero-corner variables x_1..x_{2n-2}:
    // x_i and x_{n+i} read off column i, x_{n-1} and x_n the corner columns
    auto var = [&](size_t i) { return Polynomial::variable(ring, i); };
    std::vector<Polynomial> images(2 * n - 2, Polynomial::zero(ring));
    for (size_t i = 1; i + 1 < n; ++i) {
        auto [z0, z1] = scroll_vars[i - 1];
        images[i - 1] = (var(z1) - var(z0).scaled(mu1)).scaled(inv_delta);
        images[n - 1 + i] = (var(z1) - var(z0).scaled(mu2)).scaled(inv_delta);
    }
    images[n - 2] = var(w_var);
    images[n - 1] = -var(u_var);
    return ANNormalization{std::move(normal), n, std::move(images)};
}

Report analyze(const KWForm& form, long characteristic) {
    if (characteristic < 0 ||
        (characteristic != 0 && !is_prime_u64(static_cast<uint64_t>(characteristic))))
        fail(ErrorKind::degenerate_input, "characteristic must be 0 or a prime");
    RingPtr ring = form.canonical.ring();
    if (ring->field().characteristic() != characteristic)
        fail(ErrorKind::degenerate_input, "characteristic does not match the coefficient field");

    KWInvariants inv = kw_invariants(form);
    long ht = height_formula(inv);
    Ctx c{form, inv, ht, characteristic, ring, ring->order(), inv.columns};

    Report r = [&] {
        if (ht == 0) {
            Report z = base_report(c, "zero-ideal");
            z.cd = exact(0, kZeroCite);
            z.ara = exact(0, kZeroCite);
            z.witness = make_witness(Construction::bruns_poset, form, {});
            return z;
        }
        if (inv.d == 0 && inv.g == 0) {
            Report p = sci_report(c, "nilpotent", ht, kNilpotentCite);
            std::vector<Polynomial> vars;
            std::vector<size_t> off = block_offsets(form);
            for (size_t i = 0; i < form.blocks.size(); ++i)
                for (size_t k = 0; k < form.blocks[i].vars; ++k)
                    vars.push_back(Polynomial::variable(ring, off[i] + k));
            p.witness = make_witness(Construction::nilpotent_extend, form, std::move(vars));
            return p;
        }
        if (inv.c > 0) return strip_nilpotents(c);
        if (c.n == 2) {
            Report p = sci_report(c, "principal", 1, kPrincipalCite);
            std::vector<Polynomial> minors = all_minors2(form.canonical);
            if (minors.size() != 1) fail(ErrorKind::internal, "2x2 pencil needs one minor");
            p.witness = make_witness(Construction::bruns_poset, form, std::move(minors));
            return p;
        }
        if (inv.d == 0) return scroll_rows(c);
        if (inv.g == 0) return jordan_rows(c);
        if (auto nrm = an_normalization(form)) return an_rows(c, *nrm);
        if (c.n == 3 && characteristic == 0) return two_by_three_rows(c);
        return open_report(c, "mixed-open");
    }();

    r.generic_comparison = question1_flag(r, inv.columns);
    if (r.witness && static_cast<long>(r.witness->count()) != r.ara.value)
        fail(ErrorKind::internal, "witness size disagrees with the reported ara");
    if (r.cd.status == InvariantStatus::exact && r.ara.status == InvariantStatus::exact &&
        (r.height.value > r.cd.value || r.cd.value > r.ara.value))
        fail(ErrorKind::internal, "ht <= cd <= ara violated");
    return r;
}

bool question1_flag(const Report& r, size_t n) {
    if (r.ara.status != InvariantStatus::exact && r.ara.status != InvariantStatus::upper_bound)
        fail(ErrorKind::degenerate_input, "no arithmetical rank value or upper bound to compare");
    return r.ara.value < 2 * static_cast<long>(n) - 3;
}

} // namespace minorkit
