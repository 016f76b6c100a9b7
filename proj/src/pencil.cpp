#include "minorkit/pencil.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

#include "minorkit/errors.hpp"
#include "minorkit/linalg.hpp"

namespace minorkit {

size_t Block::columns() const {
    switch (kind) {
    case BlockKind::nilpotent: return vars + 1;
    case BlockKind::jordan: return vars;
    case BlockKind::scroll: return vars - 1;
    }
    return 0;
}

// reported length happens to equal the column count for every kind
size_t Block::length() const { return columns(); }

std::string Block::token() const {
    std::ostringstream os;
    switch (kind) {
    case BlockKind::nilpotent: os << "N(" << vars + 1 << ")"; break;
    case BlockKind::jordan: os << "J(" << eigenvalue->str() << "," << vars << ")"; break;
    case BlockKind::scroll: os << "B(" << vars - 1 << ")"; break;
    }
    return os.str();
}

Block nilpotent_block(size_t vars) { return Block{BlockKind::nilpotent, vars, std::nullopt}; }

Block jordan_block(FieldElem eigenvalue, size_t m) {
    if (m == 0) fail(ErrorKind::degenerate_input, "Jordan block length must be positive");
    return Block{BlockKind::jordan, m, std::move(eigenvalue)};
}

Block scroll_block(size_t length) {
    if (length == 0) fail(ErrorKind::degenerate_input, "scroll block length must be positive");
    return Block{BlockKind::scroll, length + 1, std::nullopt};
}

namespace {

struct TokCursor {
    std::string_view s;
    size_t i = 0, line = 1, col = 1;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void adv() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) adv();
    }
    [[noreturn]] void err(const std::string& msg) const { throw ParseError({line, col}, msg); }
    void expect(char c) {
        if (done() || peek() != c) err(std::string("expected '") + c + "'");
        adv();
    }
    mpz_class read_digits(const char* what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            err(std::string("expected ") + what);
        std::string d;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            d += peek();
            adv();
        }
        return mpz_class(d);
    }
    size_t read_count(const char* what) {
        mpz_class v = read_digits(what);
        if (v <= 0 || v > 1000) err(std::string(what) + " out of range");
        return v.get_ui();
    }
};

} // namespace

std::vector<Block> parse_block_tokens(const std::string& text, const Field& field) {
    TokCursor c{text};
    std::vector<Block> out;
    c.skip_ws();
    if (c.done()) c.err("empty block specification");
    while (!c.done()) {
        char kind = c.peek();
        if (kind != 'N' && kind != 'J' && kind != 'B')
            c.err("expected a block token N(k), J(lambda,m) or B(l)");
        c.adv();
        c.expect('(');
        if (kind == 'N') {
            size_t k = c.read_count("length");
            c.expect(')');
            out.push_back(nilpotent_block(k - 1));
        } else if (kind == 'B') {
            size_t l = c.read_count("length");
            c.expect(')');
            out.push_back(scroll_block(l));
        } else {
            bool neg = false;
            if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
                neg = c.peek() == '-';
                c.adv();
            }
            mpz_class num = c.read_digits("eigenvalue");
            mpz_class den = 1;
            if (!c.done() && c.peek() == '/') {
                c.adv();
                den = c.read_digits("denominator");
                if (den == 0) c.err("zero denominator");
            }
            if (neg) num = -num;
            c.expect(',');
            size_t m = c.read_count("length");
            c.expect(')');
            out.push_back(jordan_block(FieldElem::from_fraction(field, num, den), m));
        }
        c.skip_ws();
    }
    return out;
}

namespace {

struct BlockNames {
    std::vector<std::string> all; // block variables in block order, then fillers
};

BlockNames block_var_names(const std::vector<Block>& blocks, size_t fillers) {
    BlockNames bn;
    size_t nil = 0, scr = 0;
    std::vector<FieldElem> classes;
    std::vector<size_t> class_sizes;
    for (const auto& b : blocks) {
        if (b.kind == BlockKind::nilpotent) {
            ++nil;
            for (size_t h = 1; h <= b.vars; ++h)
                bn.all.push_back("x" + std::to_string(nil) + "_" + std::to_string(h));
        } else if (b.kind == BlockKind::jordan) {
            size_t j = 0;
            for (; j < classes.size(); ++j)
                if (classes[j] == *b.eigenvalue) break;
            if (j == classes.size()) {
                classes.push_back(*b.eigenvalue);
                class_sizes.push_back(0);
            }
            size_t i = ++class_sizes[j];
            for (size_t h = 1; h <= b.vars; ++h)
                bn.all.push_back("y" + std::to_string(j + 1) + "_" + std::to_string(i) + "_" +
                                 std::to_string(h));
        } else {
            ++scr;
            for (size_t h = 0; h < b.vars; ++h)
                bn.all.push_back("z" + std::to_string(scr) + "_" + std::to_string(h));
        }
    }
    for (size_t k = 1; k <= fillers; ++k) bn.all.push_back("u" + std::to_string(k));
    return bn;
}

} // namespace

LinMatrix assemble_blocks(const std::vector<Block>& blocks, const Field& field, MonomialOrder order,
                          size_t fillers) {
    BlockNames bn = block_var_names(blocks, fillers);
    RingPtr ring = Ring::make(bn.all, field, order);
    auto var = [&](size_t k) { return Polynomial::variable(ring, k); };
    Polynomial zero = Polynomial::zero(ring);
    std::vector<std::array<Polynomial, 2>> cols;
    size_t base = 0;
    for (const auto& b : blocks) {
        if (b.kind == BlockKind::nilpotent) {
            for (size_t h = 0; h <= b.vars; ++h) {
                Polynomial top = h < b.vars ? var(base + h) : zero;
                Polynomial bot = h >= 1 ? var(base + h - 1) : zero;
                cols.push_back({top, bot});
            }
        } else if (b.kind == BlockKind::jordan) {
            for (size_t h = 0; h < b.vars; ++h) {
                Polynomial bot = var(base + h).scaled(*b.eigenvalue);
                if (h >= 1) bot = bot + var(base + h - 1);
                cols.push_back({var(base + h), bot});
            }
        } else {
            for (size_t h = 0; h + 1 < b.vars; ++h) cols.push_back({var(base + h), var(base + h + 1)});
        }
        base += b.vars;
    }
    return LinMatrix(ring, std::move(cols), 1);
}

LinMatrix make_block(const Block& b, const Field& field, MonomialOrder order) {
    return assemble_blocks({b}, field, order, 0);
}

KWForm kw_form_from_blocks(const std::vector<Block>& blocks, const Field& field,
                           MonomialOrder order) {
    if (blocks.empty()) fail(ErrorKind::degenerate_input, "no blocks given");
    LinMatrix m = assemble_blocks(blocks, field, order, 0);
    size_t n = m.ncols(), s = m.ring()->nvars();
    Certificate cert{la::identity(field, 2), la::identity(field, n), la::identity(field, s)};
    return KWForm{blocks, m, m.ring(), std::move(cert), 0};
}

KWInvariants kw_invariants(const KWForm& form) {
    KWInvariants inv;
    for (const auto& b : form.blocks) {
        inv.columns += b.columns();
        inv.block_vars += b.vars;
        switch (b.kind) {
        case BlockKind::nilpotent:
            ++inv.c;
            inv.nilpotent_lengths.push_back(b.length());
            break;
        case BlockKind::scroll:
            ++inv.g;
            inv.scroll_lengths.push_back(b.length());
            break;
        case BlockKind::jordan: {
            size_t j = 0;
            for (; j < inv.classes.size(); ++j)
                if (inv.classes[j].eigenvalue == *b.eigenvalue) break;
            if (j == inv.classes.size()) inv.classes.push_back({*b.eigenvalue, {}});
            inv.classes[j].lengths.push_back(b.vars);
            ++inv.alpha;
            inv.jordan_vars += b.vars;
            break;
        }
        }
    }
    inv.d = inv.classes.size();
    for (auto& cl : inv.classes) {
        std::sort(cl.lengths.begin(), cl.lengths.end(), std::greater<>());
        inv.gamma = std::max(inv.gamma, cl.lengths.size());
    }
    return inv;
}

namespace {

using la::Mat;
using la::Vec;

Mat corner(const Mat& m, size_t r0, size_t c0, size_t rows, size_t cols, const Field& f) {
    Mat out = la::zeros(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) out[i][j] = m[r0 + i][c0 + j];
    return out;
}

// transpose with explicit input dims, safe for zero-row or zero-column shapes
Mat tmat(const Mat& m, size_t rows, size_t cols, const Field& f) {
    Mat out = la::zeros(f, cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
    return out;
}

Mat embed_at(const Field& f, size_t full, const Mat& sub, size_t at) {
    Mat m = la::identity(f, full);
    for (size_t i = 0; i < la::nrows(sub); ++i)
        for (size_t j = 0; j < sub[i].size(); ++j) m[at + i][at + j] = sub[i][j];
    return m;
}

// complete the seed columns to an invertible square matrix using standard
// basis vectors, greedily in coordinate order
Mat complete_columns(const Field& f, const std::vector<Vec>& seed, size_t dim) {
    std::vector<Vec> cols;
    Mat probe;
    auto try_add = [&](const Vec& v) {
        probe.push_back(v);
        if (la::rank(probe) == cols.size() + 1) {
            cols.push_back(v);
            return true;
        }
        probe.pop_back();
        return false;
    };
    for (const auto& v : seed)
        if (!try_add(v)) fail(ErrorKind::internal, "chain vectors are linearly dependent");
    for (size_t i = 0; i < dim && cols.size() < dim; ++i) {
        Vec e(dim, FieldElem::zero(f));
        e[i] = FieldElem::one(f);
        try_add(e);
    }
    if (cols.size() != dim) fail(ErrorKind::internal, "basis completion failed");
    Mat m = la::zeros(f, dim, dim);
    for (size_t j = 0; j < dim; ++j)
        for (size_t i = 0; i < dim; ++i) m[i][j] = cols[j][i];
    return m;
}

struct PeelStep {
    size_t eps;  // chain degree
    bool unused; // degree-0 chain: a direction both matrices annihilate
};

// Kronecker staircase for right minimal indices of the pencil (A, B),
// smallest degree first. Invariant: current A equals L * A0 * R, same for B.
// The carved part occupies the leading fr rows and fc columns and is already
// in canonical shape, fully decoupled from the rest.
struct Peeler {
    Field f;
    size_t nr, sr;
    Mat A, B, L, R;
    size_t fr = 0, fc = 0;
    std::vector<PeelStep> steps;

    Peeler(const Field& fld, Mat a, Mat b, size_t rows, size_t cols)
        : f(fld), nr(rows), sr(cols), A(std::move(a)), B(std::move(b)), L(la::identity(fld, rows)),
          R(la::identity(fld, cols)) {}

    void left(const Mat& lsub) {
        if (nr == 0) return;
        Mat full = embed_at(f, nr, lsub, fr);
        A = la::mul(full, A);
        B = la::mul(full, B);
        L = la::mul(full, L);
    }
    void right(const Mat& rsub) {
        if (sr == 0) return;
        Mat full = embed_at(f, sr, rsub, fc);
        if (nr > 0) { // a 0 x sr matrix carries no column data to update
            A = la::mul(A, full);
            B = la::mul(B, full);
        }
        R = la::mul(R, full);
    }

    // minimal-degree polynomial kernel chain x_0..x_eps of the trailing
    // subpencil: A x_0 = 0, A x_j = -B x_{j-1}, B x_eps = 0
    std::optional<std::vector<Vec>> find_chain() const {
        size_t rn = nr - fr, rs = sr - fc;
        if (rs == 0) return std::nullopt;
        if (rn == 0) {
            Vec e(rs, FieldElem::zero(f));
            e[0] = FieldElem::one(f);
            return std::vector<Vec>{e};
        }
        Mat As = corner(A, fr, fc, rn, rs, f), Bs = corner(B, fr, fc, rn, rs, f);
        for (size_t eps = 0; eps < rs; ++eps) {
            Mat S = la::zeros(f, (eps + 2) * rn, (eps + 1) * rs);
            for (size_t j = 0; j <= eps; ++j)
                for (size_t r = 0; r < rn; ++r)
                    for (size_t c = 0; c < rs; ++c) {
                        S[j * rn + r][j * rs + c] = As[r][c];
                        S[(j + 1) * rn + r][j * rs + c] = Bs[r][c];
                    }
            auto ker = la::nullspace(std::move(S));
            if (ker.empty()) continue;
            std::vector<Vec> xs;
            for (size_t j = 0; j <= eps; ++j)
                xs.emplace_back(ker[0].begin() + j * rs, ker[0].begin() + (j + 1) * rs);
            return xs;
        }
        return std::nullopt;
    }

    // kill the coupling between the freshly carved block (eps rows, eps+1
    // columns at the frozen corner) and the trailing part; solvable because
    // eps is the minimal index of the subpencil
    void decouple(size_t eps) {
        size_t rn = nr - fr, rs = sr - fc;
        size_t tr = rn - eps, tc = rs - eps - 1;
        if (tc == 0) return;
        Mat As = corner(A, fr, fc, rn, rs, f), Bs = corner(B, fr, fc, rn, rs, f);
        size_t nf = eps * tr, ng = (eps + 1) * tc;
        Mat M = la::zeros(f, 2 * eps * tc, nf + ng);
        Vec rhs(2 * eps * tc, FieldElem::zero(f));
        auto fidx = [&](size_t h, size_t r) { return h * tr + r; };
        auto gidx = [&](size_t h, size_t c) { return nf + h * tc + c; };
        size_t row = 0;
        for (size_t h = 0; h < eps; ++h)
            for (size_t c = 0; c < tc; ++c) {
                for (size_t r = 0; r < tr; ++r) M[row][fidx(h, r)] = As[eps + r][eps + 1 + c];
                M[row][gidx(h, c)] = FieldElem::one(f);
                rhs[row] = -As[h][eps + 1 + c];
                ++row;
                for (size_t r = 0; r < tr; ++r) M[row][fidx(h, r)] = Bs[eps + r][eps + 1 + c];
                M[row][gidx(h + 1, c)] = FieldElem::one(f);
                rhs[row] = -Bs[h][eps + 1 + c];
                ++row;
            }
        auto sol = la::solve(std::move(M), std::move(rhs));
        if (!sol) fail(ErrorKind::internal, "block decoupling system unsolvable");
        Mat Ldec = la::identity(f, rn), Rdec = la::identity(f, rs);
        for (size_t h = 0; h < eps; ++h)
            for (size_t r = 0; r < tr; ++r) Ldec[h][eps + r] = (*sol)[fidx(h, r)];
        for (size_t h = 0; h <= eps; ++h)
            for (size_t c = 0; c < tc; ++c) Rdec[h][eps + 1 + c] = (*sol)[gidx(h, c)];
        left(Ldec);
        right(Rdec);
    }

    bool carve_one() {
        auto found = find_chain();
        if (!found) return false;
        const auto& xs = *found;
        size_t eps = xs.size() - 1, rn = nr - fr, rs = sr - fc;
        if (eps == 0) {
            // both matrices annihilate the direction: its column is zero after
            // the change of variables
            right(complete_columns(f, {xs[0]}, rs));
            ++fc;
            steps.push_back({0, true});
            return true;
        }
        // z_i = (-1)^i x_{eps-i} turns the chain into the canonical staircase
        std::vector<Vec> vcols(eps + 1), wcols(eps);
        for (size_t i = 0; i <= eps; ++i) {
            Vec v = xs[eps - i];
            if (i % 2)
                for (auto& e : v) e = -e;
            vcols[i] = std::move(v);
        }
        Mat Bs = corner(B, fr, fc, rn, rs, f);
        for (size_t h = 0; h < eps; ++h) {
            Vec y = la::mul_vec(Bs, xs[eps - h - 1]); // y_{eps-h} = B x_{eps-h-1}
            if (h % 2 == 0)
                for (auto& e : y) e = -e;
            wcols[h] = std::move(y);
        }
        right(complete_columns(f, vcols, rs));
        auto yinv = la::inverse(complete_columns(f, wcols, rn));
        if (!yinv) fail(ErrorKind::internal, "chain image completion not invertible");
        left(*yinv);
        decouple(eps);
        fr += eps;
        fc += eps + 1;
        steps.push_back({eps, false});
        return true;
    }

    void run() {
        while (carve_one()) {}
    }
};

std::string upoly_str(const std::vector<FieldElem>& c) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        std::string coef = c[k].str();
        bool neg = !coef.empty() && coef[0] == '-';
        std::string mag = neg ? coef.substr(1) : coef;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (k == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FieldElem peval(const std::vector<FieldElem>& c, const FieldElem& x) {
    FieldElem acc = FieldElem::zero(x.field());
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

// synthetic division by (t - r); quotient replaces c, remainder returned
FieldElem deflate(std::vector<FieldElem>& c, const FieldElem& r) {
    size_t n = c.size() - 1;
    std::vector<FieldElem> q(n, FieldElem::zero(r.field()));
    FieldElem carry = c[n];
    for (size_t k = n; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + r * carry;
    }
    c = std::move(q);
    return carry;
}

struct Roots {
    std::vector<std::pair<FieldElem, size_t>> r; // ascending, with multiplicity
    std::vector<FieldElem> residual;             // rootless cofactor
};

void take_root(std::vector<FieldElem>& c, const FieldElem& x, Roots& out) {
    size_t mult = 0;
    while (c.size() > 1 && peval(c, x).is_zero()) {
        FieldElem rem = deflate(c, x);
        if (!rem.is_zero()) fail(ErrorKind::internal, "nonzero deflation remainder");
        ++mult;
    }
    if (mult) out.r.push_back({x, mult});
}

// divisors assembled from a trial-division factorization; a cofactor beyond
// the trial bound is kept whole, as if prime
std::vector<mpz_class> bounded_divisors(mpz_class n) {
    std::vector<std::pair<mpz_class, unsigned>> fac;
    for (mpz_class p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) fac.push_back({p, e});
    }
    if (n > 1) fac.push_back({n, 1});
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 20000) fail(ErrorKind::resource_cap, "eigenvalue candidate set too large");
    }
    return divs;
}

Roots field_roots(const Field& f, std::vector<FieldElem> c) {
    Roots out;
    if (f.is_rational()) {
        take_root(c, FieldElem::zero(f), out);
        if (c.size() > 1) {
            // the polynomial is monic over Q; after t = y / L with L the common
            // denominator, integer roots of the result divide its constant term
            mpz_class L = 1;
            for (const auto& e : c) L = lcm(L, mpz_class(e.rat().get_den()));
            mpq_class scaled = abs(c[0].rat());
            for (size_t k = 1; k < c.size(); ++k) scaled *= L;
            scaled.canonicalize();
            if (scaled.get_den() != 1) fail(ErrorKind::internal, "root scaling not integral");
            for (const auto& d : bounded_divisors(scaled.get_num())) {
                take_root(c, FieldElem::from_fraction(f, d, L), out);
                take_root(c, FieldElem::from_fraction(f, -d, L), out);
            }
        }
    } else {
        if (f.p > (uint64_t{1} << 20))
            fail(ErrorKind::resource_cap,
                 "eigenvalue enumeration needs characteristic at most 2^20");
        for (uint64_t v = 0; v < f.p && c.size() > 1; ++v)
            take_root(c, FieldElem::from_long(f, static_cast<long>(v)), out);
    }
    std::sort(out.r.begin(), out.r.end(),
              [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
    out.residual = std::move(c);
    return out;
}

// Jordan chains of T for eigenvalue lambda via the kernel filtration of
// U = T - lambda I; each chain is [top, U top, ..., U^{len-1} top]
std::vector<std::vector<Vec>> jordan_chains(const Field& f, const Mat& T, const FieldElem& lambda,
                                            size_t alg) {
    size_t m = la::nrows(T);
    Mat U = T;
    for (size_t i = 0; i < m; ++i) U[i][i] = U[i][i] - lambda;
    std::vector<std::vector<Vec>> kers{{}}; // kernel of U^0
    Mat pw = la::identity(f, m);
    while (true) {
        pw = la::mul(U, pw);
        kers.push_back(la::nullspace(pw));
        if (kers.back().size() >= alg) break;
        if (kers.size() > m + 1) fail(ErrorKind::internal, "kernel filtration did not stabilize");
    }
    if (kers.back().size() != alg)
        fail(ErrorKind::internal, "kernel filtration overshoots the multiplicity");
    size_t q = kers.size() - 1;
    Mat probe;
    auto independent = [&](const Vec& v) {
        probe.push_back(v);
        if (la::rank(probe) == probe.size()) return true;
        probe.pop_back();
        return false;
    };
    std::vector<std::vector<Vec>> chains;
    std::vector<Vec> carry;
    for (size_t i = q; i >= 1; --i) {
        probe.clear();
        for (const auto& v : kers[i - 1])
            if (!independent(v)) fail(ErrorKind::internal, "kernel basis not independent");
        for (const auto& v : carry)
            if (!independent(v)) fail(ErrorKind::internal, "chain carry not independent");
        std::vector<Vec> newtops;
        for (const auto& cand : kers[i])
            if (independent(cand)) newtops.push_back(cand);
        for (const auto& t : newtops) {
            std::vector<Vec> chain{t};
            for (size_t k = 1; k < i; ++k) chain.push_back(la::mul_vec(U, chain.back()));
            chains.push_back(std::move(chain));
        }
        std::vector<Vec> next;
        for (const auto& v : carry) next.push_back(la::mul_vec(U, v));
        for (const auto& v : newtops) next.push_back(la::mul_vec(U, v));
        carry = std::move(next);
    }
    return chains;
}

struct Rec {
    Block block;
    bool filler;
    size_t klass; // jordan class ordinal
    size_t rs, rc, cs, cc;
    size_t seq;
};

int rec_category(const Rec& r) {
    if (r.filler) return 3;
    switch (r.block.kind) {
    case BlockKind::nilpotent: return 0;
    case BlockKind::jordan: return 1;
    case BlockKind::scroll: return 2;
    }
    return 3;
}

bool rec_less(const Rec& a, const Rec& b) {
    int ca = rec_category(a), cb = rec_category(b);
    if (ca != cb) return ca < cb;
    switch (ca) {
    case 0:
    case 2:
        if (a.block.vars != b.block.vars) return a.block.vars > b.block.vars;
        break;
    case 1:
        if (a.klass != b.klass) return a.klass < b.klass;
        if (a.block.vars != b.block.vars) return a.block.vars > b.block.vars;
        break;
    default: break;
    }
    return a.seq < b.seq;
}

} // namespace

KWForm kw_decompose(const LinMatrix& m) {
    RingPtr ring = m.ring();
    const Field field = ring->field();
    size_t n = m.ncols(), s = ring->nvars();

    Mat A0 = la::zeros(field, n, s), B0 = la::zeros(field, n, s);
    for (size_t h = 0; h < n; ++h) {
        const auto& col = m.col(h);
        for (size_t k = 0; k < s; ++k) {
            A0[h][k] = col[0].linear_coeff(k);
            B0[h][k] = col[1].linear_coeff(k);
        }
    }

    // GL(2) pre-twist: pick a row combination of maximal (generic) rank, so
    // the regular part ends up with an invertible leading matrix. Failures
    // are roots of one nonzero binary form of degree <= grk, so grk + 3
    // distinct candidates always contain a good one when the field is big
    // enough; running out over a small prime field is a genuine failure.
    size_t grk = la::generic_rank(A0, B0);
    FieldElem fz = FieldElem::zero(field), fo = FieldElem::one(field);
    std::vector<std::pair<FieldElem, FieldElem>> cands{{fo, fz}, {fz, fo}};
    uint64_t lim = grk + 1;
    if (!field.is_rational()) lim = std::min<uint64_t>(lim, field.p - 1);
    for (uint64_t cc = 1; cc <= lim; ++cc)
        cands.push_back({fo, FieldElem::from_long(field, static_cast<long>(cc))});
    std::optional<std::pair<FieldElem, FieldElem>> twist;
    for (const auto& [al, be] : cands) {
        Mat cand = la::add(la::scaled(A0, al), la::scaled(B0, be));
        if (la::rank(cand) == grk) {
            twist = {al, be};
            break;
        }
    }
    if (!twist)
        fail(ErrorKind::eigenvalues_not_in_field,
             "no scalar row combination attains the generic pencil rank over " + field.str());
    auto [al, be] = *twist;
    FieldElem ga = al.is_zero() ? fo : fz, de = al.is_zero() ? fz : fo;
    Mat C2{{al, be}, {ga, de}};

    Peeler work(field, la::add(la::scaled(A0, al), la::scaled(B0, be)),
                la::add(la::scaled(A0, ga), la::scaled(B0, de)), n, s);
    work.run(); // right minimal indices: scroll blocks and unused directions
    size_t fr1 = work.fr, fc1 = work.fc;

    // left minimal indices via the transposed rest: nilpotent blocks,
    // including zero columns as the degree-0 case
    size_t rn = n - fr1, rs = s - fc1;
    Peeler tp(field, tmat(corner(work.A, fr1, fc1, rn, rs, field), rn, rs, field),
              tmat(corner(work.B, fr1, fc1, rn, rs, field), rn, rs, field), rs, rn);
    tp.run();
    work.left(tmat(tp.R, rn, rn, field));
    work.right(tmat(tp.L, rs, rs, field));
    work.fr += tp.fc;
    work.fc += tp.fr;

    // regular part: Jordan structure of the matrix quotient
    size_t mreg = n - work.fr;
    if (mreg != s - work.fc) fail(ErrorKind::internal, "regular part is not square");
    std::vector<std::pair<FieldElem, size_t>> jrec; // (eigenvalue, length) per block
    std::vector<FieldElem> jlams;                   // ascending class representatives
    if (mreg > 0) {
        Mat Ar = corner(work.A, work.fr, work.fc, mreg, mreg, field);
        Mat Br = corner(work.B, work.fr, work.fc, mreg, mreg, field);
        auto ainv = la::inverse(Ar);
        if (!ainv) fail(ErrorKind::internal, "regular part leading matrix not invertible");
        Mat T = la::mul(*ainv, Br);
        Roots rt = field_roots(field, la::charpoly(T));
        if (rt.residual.size() > 1)
            fail(ErrorKind::eigenvalues_not_in_field,
                 "eigenvalue factor without roots in " + field.str() + ": " +
                     upoly_str(rt.residual));
        std::vector<Vec> cols;
        for (const auto& [lam, mult] : rt.r) {
            jlams.push_back(lam);
            auto chains = jordan_chains(field, T, lam, mult);
            size_t tot = 0;
            for (auto& ch : chains) {
                jrec.push_back({lam, ch.size()});
                tot += ch.size();
                for (auto& v : ch) cols.push_back(std::move(v));
            }
            if (tot != mult) fail(ErrorKind::internal, "chain sizes disagree with multiplicity");
        }
        Mat vreg = la::zeros(field, mreg, mreg);
        for (size_t j = 0; j < mreg; ++j)
            for (size_t i = 0; i < mreg; ++i) vreg[i][j] = cols[j][i];
        auto lreg = la::inverse(la::mul(Ar, vreg));
        if (!lreg) fail(ErrorKind::internal, "Jordan chain basis not invertible");
        work.left(*lreg);
        work.right(vreg);
    }

    // collect blocks with their row/column slots, then normalize the order
    std::vector<Rec> recs;
    size_t seq = 0, r = 0, c = 0;
    for (const auto& st : work.steps) {
        if (st.unused) {
            recs.push_back({nilpotent_block(0), true, 0, r, 0, c, 1, seq++});
            c += 1;
        } else {
            recs.push_back({scroll_block(st.eps), false, 0, r, st.eps, c, st.eps + 1, seq++});
            r += st.eps;
            c += st.eps + 1;
        }
    }
    size_t ro = fr1, co = fc1;
    for (const auto& st : tp.steps) {
        recs.push_back({nilpotent_block(st.eps), false, 0, ro, st.eps + 1, co, st.eps, seq++});
        ro += st.eps + 1;
        co += st.eps;
    }
    size_t k = 0;
    for (const auto& [lam, len] : jrec) {
        size_t klass = 0;
        while (!(jlams[klass] == lam)) ++klass;
        recs.push_back({jordan_block(lam, len), false, klass, work.fr + k, len, work.fc + k, len,
                        seq++});
        k += len;
    }
    std::stable_sort(recs.begin(), recs.end(), rec_less);

    std::vector<size_t> row_order, col_order;
    for (const auto& rec : recs) {
        for (size_t i = 0; i < rec.rc; ++i) row_order.push_back(rec.rs + i);
        for (size_t j = 0; j < rec.cc; ++j) col_order.push_back(rec.cs + j);
    }
    if (row_order.size() != n || col_order.size() != s)
        fail(ErrorKind::internal, "block slots do not cover the pencil");
    Mat lp = la::zeros(field, n, n), rp = la::zeros(field, s, s);
    for (size_t i = 0; i < n; ++i) lp[i][row_order[i]] = fo;
    for (size_t j = 0; j < s; ++j) rp[col_order[j]][j] = fo;
    work.fr = 0;
    work.fc = 0;
    work.left(lp);
    work.right(rp);

    std::vector<Block> blocks;
    size_t fillers = 0;
    for (const auto& rec : recs) {
        if (rec.filler)
            ++fillers;
        else
            blocks.push_back(rec.block);
    }

    LinMatrix canonical = assemble_blocks(blocks, field, ring->order(), fillers);
    for (size_t h = 0; h < n; ++h) {
        const auto& col = canonical.col(h);
        for (size_t kk = 0; kk < s; ++kk)
            if (!(col[0].linear_coeff(kk) == work.A[h][kk]) ||
                !(col[1].linear_coeff(kk) == work.B[h][kk]))
                fail(ErrorKind::internal, "canonical reassembly mismatch");
    }

    Certificate cert{std::move(C2), la::transpose(work.L), work.R};
    return KWForm{std::move(blocks), std::move(canonical), ring, std::move(cert), fillers};
}

bool verify_certificate(const KWForm& form, const LinMatrix& original) {
    const Certificate& cert = form.cert;
    RingPtr oring = original.ring();
    RingPtr cring = form.canonical.ring();
    if (!(oring->field() == cring->field())) return false;
    size_t n = original.ncols(), s = oring->nvars();
    if (form.canonical.ncols() != n || cring->nvars() != s) return false;
    if (la::nrows(cert.C) != 2 || la::ncols(cert.C) != 2) return false;
    if (la::nrows(cert.Cp) != n || la::ncols(cert.Cp) != n) return false;
    if (s > 0 && (la::nrows(cert.V) != s || la::ncols(cert.V) != s)) return false;
    if (!la::inverse(cert.C) || !la::inverse(cert.Cp)) return false;
    if (s > 0 && !la::inverse(cert.V)) return false;

    std::vector<Polynomial> images;
    for (size_t kk = 0; kk < s; ++kk) {
        Polynomial img = Polynomial::zero(cring);
        for (size_t t = 0; t < s; ++t)
            if (!cert.V[kk][t].is_zero())
                img = img + Polynomial::variable(cring, t).scaled(cert.V[kk][t]);
        images.push_back(img);
    }
    std::vector<std::array<Polynomial, 2>> sub;
    for (size_t h = 0; h < n; ++h) {
        const auto& col = original.col(h);
        if (s == 0) {
            if (!col[0].is_zero() || !col[1].is_zero()) return false;
            sub.push_back({Polynomial::zero(cring), Polynomial::zero(cring)});
        } else {
            sub.push_back({col[0].substitute_linear(images), col[1].substitute_linear(images)});
        }
    }
    for (size_t h = 0; h < n; ++h) {
        for (size_t row = 0; row < 2; ++row) {
            Polynomial acc = Polynomial::zero(cring);
            for (size_t j = 0; j < n; ++j) {
                if (cert.Cp[j][h].is_zero()) continue;
                Polynomial mixed = sub[j][0].scaled(cert.C[row][0]) + sub[j][1].scaled(cert.C[row][1]);
                acc = acc + mixed.scaled(cert.Cp[j][h]);
            }
            if (!(acc == form.canonical.at(static_cast<int>(row),
                                           form.canonical.label_base() + static_cast<int>(h))))
                return false;
        }
    }
    return true;
}

} // namespace minorkit
