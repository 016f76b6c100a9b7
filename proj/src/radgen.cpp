#include "minorkit/radgen.hpp"

#include <algorithm>
#include <utility>

namespace minorkit {

std::string construction_name(Construction c) {
    switch (c) {
    case Construction::schmitt_vogel: return "schmitt-vogel";
    case Construction::bruns_poset: return "bruns-poset";
    case Construction::scroll_sci: return "scroll-sci";
    case Construction::jordan_q: return "jordan-q";
    case Construction::an_kn: return "an-kn";
    case Construction::maral_reduce: return "maral-reduce";
    case Construction::nilpotent_extend: return "nilpotent-extend";
    }
    fail(ErrorKind::internal, "unknown construction tag");
}

std::string witness_status_name(WitnessStatus s) {
    switch (s) {
    case WitnessStatus::unverified: return "unverified";
    case WitnessStatus::verified: return "verified";
    case WitnessStatus::failed: return "failed";
    }
    fail(ErrorKind::internal, "unknown witness status");
}

bool verify_witness(WitnessSet& w, const GBLimits& limits) {
    IdealPresentation claim(w.target.ring(), w.polys);
    bool ok = equal_radical(w.target, claim, limits);
    w.status = ok ? WitnessStatus::verified : WitnessStatus::failed;
    return ok;
}

namespace {

// p * p'' lies in the principal ideal (q); divisibility when everything in
// the partition is a single term, ideal membership otherwise
bool in_principal(const Polynomial& prod, const Polynomial& q, bool monomial_path,
                  const GBLimits& limits) {
    if (q.is_zero()) return prod.is_zero();
    if (monomial_path) return q.lm().divides(prod.lm());
    return ideal_member(prod, IdealPresentation(q.ring(), {q}), limits);
}

} // namespace

void validate_partition(const SVPartition& p, const GBLimits& limits) {
    if (p.parts.empty()) fail(ErrorKind::degenerate_input, "sum partition: no parts");
    if (p.parts[0].size() != 1)
        fail(ErrorKind::degenerate_input, "sum partition: the first part must be a singleton");
    if (!p.exps.empty()) {
        bool shape = p.exps.size() == p.parts.size();
        for (size_t l = 0; shape && l < p.parts.size(); ++l)
            shape = p.exps[l].size() == p.parts[l].size();
        if (!shape) fail(ErrorKind::degenerate_input, "sum partition: exponent shape mismatch");
        for (const auto& row : p.exps)
            for (unsigned e : row)
                if (e == 0) fail(ErrorKind::degenerate_input, "sum partition: zero exponent");
    }
    RingPtr ring;
    bool all_terms = true;
    for (const auto& part : p.parts)
        for (const auto& f : part) {
            if (f.is_zero()) fail(ErrorKind::degenerate_input, "sum partition: zero member");
            if (!ring) ring = f.ring();
            else check_same_ring(ring, f.ring());
            all_terms = all_terms && f.nterms() == 1;
        }
    for (size_t l = 1; l < p.parts.size(); ++l) {
        const auto& part = p.parts[l];
        for (size_t a = 0; a < part.size(); ++a)
            for (size_t b = a + 1; b < part.size(); ++b) {
                if (part[a] == part[b]) continue; // the same element listed twice
                Polynomial prod = part[a] * part[b];
                bool found = false;
                for (size_t l2 = 0; l2 < l && !found; ++l2)
                    for (const auto& q : p.parts[l2])
                        if (in_principal(prod, q, all_terms, limits)) {
                            found = true;
                            break;
                        }
                if (!found)
                    fail(ErrorKind::condition_violated,
                         "sum partition: part " + std::to_string(l) + ": (" + part[a].str() +
                             ") * (" + part[b].str() + ") is in no earlier principal ideal");
            }
    }
}

WitnessSet schmitt_vogel(const SVPartition& p, const GBLimits& limits) {
    validate_partition(p, limits);
    RingPtr ring = p.parts[0][0].ring();
    std::vector<Polynomial> all;
    for (const auto& part : p.parts)
        for (const auto& f : part) all.push_back(f);
    std::vector<Polynomial> qs;
    for (size_t l = 0; l < p.parts.size(); ++l) {
        Polynomial q = Polynomial::zero(ring);
        for (size_t i = 0; i < p.parts[l].size(); ++i)
            q = q + p.parts[l][i].pow(p.exps.empty() ? 1u : p.exps[l][i]);
        qs.push_back(q);
    }
    return WitnessSet{Construction::schmitt_vogel, IdealPresentation(ring, std::move(all)),
                      std::move(qs)};
}

WitnessSet bruns_poset_polys(const LinMatrix& m) {
    int n = static_cast<int>(m.ncols());
    if (n < 2) fail(ErrorKind::degenerate_input, "poset sums need at least 2 columns");
    int base = m.label_base();
    // rank of [a,b] (1-based positions, a < b) in the specialization order is
    // a+b-2; the closed index formula must list exactly the same level
    std::vector<std::vector<std::pair<int, int>>> by_rank(2 * n - 2);
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) by_rank[a + b - 2].push_back({a, b});
    for (int j = 1; j <= 2 * n - 3; ++j) {
        int dj = (j - n + 1) * (j / n);
        std::vector<std::pair<int, int>> closed;
        for (int k = 0; k <= (j + 1) / 2 - 1 - dj; ++k)
            closed.push_back({k + 1 + dj, j - k + 1 - dj});
        if (closed != by_rank[j])
            fail(ErrorKind::internal, "poset level mismatch at rank " + std::to_string(j));
    }
    std::vector<Polynomial> ps;
    for (int j = 1; j <= 2 * n - 3; ++j) {
        Polynomial s = Polynomial::zero(m.ring());
        for (auto [a, b] : by_rank[j]) s = s + minor2(m, base + a - 1, base + b - 1);
        ps.push_back(s);
    }
    return WitnessSet{Construction::bruns_poset, IdealPresentation(m.ring(), all_minors2(m)),
                      std::move(ps)};
}

WitnessSet bruns_poset_polys(int n, const Field& f, MonomialOrder o) {
    if (n < 2) fail(ErrorKind::degenerate_input, "poset sums need at least 2 columns");
    return bruns_poset_polys(generic_matrix(n, f, o));
}

WitnessSet scroll_sci(int n, const Field& f, MonomialOrder o) {
    if (n < 1) fail(ErrorKind::degenerate_input, "scroll power sums need length >= 1");
    LinMatrix b = make_block(scroll_block(static_cast<size_t>(n) + 1), f, o);
    RingPtr ring = b.ring(); // z_0 .. z_{n+1}
    size_t nv = ring->nvars();
    std::vector<Polynomial> fs;
    for (int i = 1; i <= n; ++i) {
        std::vector<Term> ts;
        for (int a = 0; a <= i; ++a) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(i),
                         static_cast<unsigned long>(a));
            if (a % 2 == 1) bin = -bin;
            Monomial mono(nv);
            if (i - a > 0)
                mono = mono * Monomial::variable(nv, static_cast<size_t>(i) + 1,
                                                 static_cast<uint16_t>(i - a));
            mono = mono * Monomial::variable(nv, static_cast<size_t>(a));
            if (a > 0)
                mono = mono *
                       Monomial::variable(nv, static_cast<size_t>(i), static_cast<uint16_t>(a));
            ts.push_back({FieldElem::from_fraction(f, bin, 1), mono});
        }
        fs.push_back(Polynomial::from_terms(ring, std::move(ts)));
    }
    return WitnessSet{Construction::scroll_sci, IdealPresentation(ring, all_minors2(b)),
                      std::move(fs)};
}

WitnessSet jordan_generators(const KWForm& form) {
    const auto& blocks = form.blocks;
    if (blocks.empty()) fail(ErrorKind::degenerate_input, "empty form");
    for (const auto& b : blocks)
        if (b.kind != BlockKind::jordan)
            fail(ErrorKind::degenerate_input, "non-Jordan block present: " + b.token());
    RingPtr ring = form.canonical.ring();
    std::vector<size_t> off(blocks.size(), 0);
    for (size_t i = 1; i < blocks.size(); ++i) off[i] = off[i - 1] + blocks[i - 1].vars;

    // the non-last variable of every block cuts out the linear part
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t h = 1; h < blocks[i].vars; ++h)
            gens.push_back(Polynomial::variable(ring, off[i] + h - 1));

    // classes grouped by eigenvalue, largest class first (ties by eigenvalue);
    // the antidiagonal argument needs the sizes nonincreasing
    struct Cls {
        FieldElem ev;
        std::vector<size_t> members;
    };
    std::vector<Cls> classes;
    for (size_t i = 0; i < blocks.size(); ++i) {
        const FieldElem& ev = *blocks[i].eigenvalue;
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const Cls& c) { return c.ev == ev; });
        if (it == classes.end()) classes.push_back({ev, {i}});
        else it->members.push_back(i);
    }
    std::stable_sort(classes.begin(), classes.end(), [](const Cls& a, const Cls& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return a.ev.cmp(b.ev) < 0;
    });

    size_t d = classes.size();
    size_t alpha = blocks.size();
    if (d > 1) {
        auto last = [&](size_t i) { return off[i] + blocks[i].vars - 1; };
        // product matrix of last variables: rows run over classes d down to 2,
        // columns over classes 1 to d-1; the entry at (row class k, column
        // class j) is nonzero exactly when k > j
        std::vector<std::pair<size_t, size_t>> rows, cols; // (class position, last var)
        for (size_t k = d; k >= 2; --k)
            for (size_t i : classes[k - 1].members) rows.push_back({k, last(i)});
        for (size_t j = 1; j <= d - 1; ++j)
            for (size_t i : classes[j - 1].members) cols.push_back({j, last(i)});
        size_t nv = ring->nvars();
        for (size_t l = 1; l <= alpha - 1; ++l) {
            std::vector<Term> ts;
            for (size_t r = 1; r <= rows.size() && r <= l; ++r) {
                size_t c = l + 1 - r;
                if (c > cols.size()) continue;
                if (rows[r - 1].first <= cols[c - 1].first) continue;
                Monomial mono = Monomial::variable(nv, rows[r - 1].second) *
                                Monomial::variable(nv, cols[c - 1].second);
                ts.push_back({FieldElem::one(ring->field()), mono});
            }
            if (ts.empty()) fail(ErrorKind::internal, "empty antidiagonal in the product matrix");
            gens.push_back(Polynomial::from_terms(ring, std::move(ts)));
        }
    }
    return WitnessSet{Construction::jordan_q,
                      IdealPresentation(ring, all_minors2(form.canonical)), std::move(gens)};
}

WitnessSet an_generators(int n, const Field& f, MonomialOrder o) {
    if (n < 4) fail(ErrorKind::degenerate_input, "zero-diagonal family needs n >= 4");
    LinMatrix a = zero_diagonal_matrix(n, f, o); // labels 0 .. n-1
    RingPtr ring = a.ring();
    // monomial sums: q_1 = -[0,n-1], q_i = -[0,i-1] - [i-1,n-1]
    std::vector<Polynomial> q(static_cast<size_t>(n), Polynomial::zero(ring));
    q[1] = -minor2(a, 0, n - 1);
    for (int i = 2; i <= n - 1; ++i) q[i] = -minor2(a, 0, i - 1) - minor2(a, i - 1, n - 1);
    // poset sums of the inner generic submatrix (first and last column removed)
    std::vector<int> inner(static_cast<size_t>(n) - 2);
    for (int c = 1; c <= n - 2; ++c) inner[c - 1] = c;
    WitnessSet bruns = bruns_poset_polys(submatrix(a, inner, 1));
    const auto& p = bruns.polys; // p_1 .. p_{2n-7}
    std::vector<Polynomial> kn;
    for (int j = 1; j <= n - 4; ++j) kn.push_back(p[j - 1]);
    for (int i = 1; i <= n - 3; ++i) kn.push_back(q[i] + p[n - 5 + i]);
    kn.push_back(q[n - 2]);
    kn.push_back(q[n - 1]);
    return WitnessSet{Construction::an_kn, IdealPresentation(ring, all_minors2(a)),
                      std::move(kn)};
}

WitnessSet maral_reduce(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g,
                        const std::vector<Polynomial>& h, unsigned r) {
    size_t k = f.size();
    if (k < 2) fail(ErrorKind::degenerate_input, "need at least two generators");
    if (g.size() != k - 1 || h.size() != k - 1)
        fail(ErrorKind::degenerate_input, "coefficient lists must have k-1 entries");
    if (r == 0) fail(ErrorKind::degenerate_input, "power must be positive");
    RingPtr ring = f[0].ring();
    Polynomial syz = Polynomial::zero(ring);
    for (size_t i = 0; i + 1 < k; ++i) syz = syz + g[i] * f[i];
    if (!syz.is_zero())
        fail(ErrorKind::syzygy_invalid, "not a syzygy of f_1..f_{k-1}: remainder " + syz.str());
    Polynomial comb = Polynomial::zero(ring);
    for (size_t i = 0; i + 1 < k; ++i) comb = comb + h[i] * g[i];
    if (f[k - 1].pow(r) != comb)
        fail(ErrorKind::power_not_in_syzygy, "f_k^r is not the supplied combination of the syzygy");
    std::vector<Polynomial> qs;
    for (size_t i = 0; i + 1 < k; ++i) qs.push_back(f[k - 1] * h[i] + f[i]);
    return WitnessSet{Construction::maral_reduce, IdealPresentation(ring, f), std::move(qs)};
}

Polynomial plucker_identity(const LinMatrix& m, int h, int j1, int j2, int j3) {
    return minor2(m, h, j1) * minor2(m, j2, j3) - minor2(m, h, j2) * minor2(m, j1, j3) +
           minor2(m, h, j3) * minor2(m, j1, j2);
}

WitnessSet nilpotent_extend(const WitnessSet& base, const LinMatrix& x, const Block& block) {
    if (block.kind != BlockKind::nilpotent)
        fail(ErrorKind::degenerate_input, "extension block must be nilpotent");
    check_same_ring(base.target.ring(), x.ring());
    size_t v = block.vars;
    std::vector<std::string> names;
    for (size_t i = 1; i <= v; ++i) {
        std::string nm = "w" + std::to_string(i);
        if (x.ring()->var_index(nm)) fail(ErrorKind::degenerate_input, "variable collision: " + nm);
        names.push_back(nm);
    }
    RingPtr ext = x.ring()->extended(names);
    size_t s = x.ring()->nvars();
    std::vector<size_t> varmap(s);
    for (size_t i = 0; i < s; ++i) varmap[i] = i;
    std::vector<std::array<Polynomial, 2>> cols;
    for (size_t c = 0; c < x.ncols(); ++c)
        cols.push_back({x.col(c)[0].map_ring(ext, varmap), x.col(c)[1].map_ring(ext, varmap)});
    Polynomial z = Polynomial::zero(ext);
    for (size_t hc = 0; hc <= v; ++hc) {
        Polynomial top = hc < v ? Polynomial::variable(ext, s + hc) : z;
        Polynomial bot = hc >= 1 ? Polynomial::variable(ext, s + hc - 1) : z;
        cols.push_back({std::move(top), std::move(bot)});
    }
    LinMatrix m2(ext, std::move(cols), x.label_base());
    std::vector<Polynomial> polys;
    for (const auto& p0 : base.polys) polys.push_back(p0.map_ring(ext, varmap));
    for (size_t i = 0; i < v; ++i) polys.push_back(Polynomial::variable(ext, s + i));
    return WitnessSet{Construction::nilpotent_extend, IdealPresentation(ext, all_minors2(m2)),
                      std::move(polys)};
}

} // namespace minorkit
