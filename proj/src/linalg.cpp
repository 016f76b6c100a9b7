#include "minorkit/linalg.hpp"

#include "minorkit/errors.hpp"

namespace minorkit::la {

namespace {

Field field_of(const Mat& m) {
    if (m.empty() || m[0].empty()) fail(ErrorKind::internal, "field_of: empty matrix");
    const FieldElem& e = m[0][0];
    return e.field();
}

} // namespace

Mat zeros(const Field& f, size_t r, size_t c) {
    return Mat(r, Vec(c, FieldElem::zero(f)));
}

Mat identity(const Field& f, size_t n) {
    Mat m = zeros(f, n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = FieldElem::one(f);
    return m;
}

size_t nrows(const Mat& m) { return m.size(); }
size_t ncols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

Mat mul(const Mat& a, const Mat& b) {
    size_t n = nrows(a), k = ncols(a), s = ncols(b);
    if (k != nrows(b)) fail(ErrorKind::internal, "mul: shape mismatch");
    if (n == 0) return {};
    if (k == 0 || s == 0) return Mat(n, Vec());
    Field f = field_of(a);
    Mat out = zeros(f, n, s);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t h = 0; h < s; ++h) out[i][h] = out[i][h] + a[i][j] * b[j][h];
        }
    return out;
}

Vec mul_vec(const Mat& a, const Vec& v) {
    size_t n = nrows(a), k = ncols(a);
    if (k != v.size()) fail(ErrorKind::internal, "mul_vec: shape mismatch");
    Field f = field_of(a);
    Vec out(n, FieldElem::zero(f));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) out[i] = out[i] + a[i][j] * v[j];
    return out;
}

Mat transpose(const Mat& m) {
    size_t r = nrows(m), c = ncols(m);
    if (r == 0) return m;
    Field f = field_of(m);
    Mat out = zeros(f, c, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) out[j][i] = m[i][j];
    return out;
}

Mat add(const Mat& a, const Mat& b) {
    if (nrows(a) != nrows(b) || ncols(a) != ncols(b))
        fail(ErrorKind::internal, "add: shape mismatch");
    Mat out = a;
    for (size_t i = 0; i < nrows(a); ++i)
        for (size_t j = 0; j < ncols(a); ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

Mat scaled(const Mat& a, const FieldElem& c) {
    Mat out = a;
    for (auto& row : out)
        for (auto& e : row) e = e * c;
    return out;
}

std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t r = nrows(m), c = ncols(m);
    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        size_t sel = r;
        for (size_t i = row; i < r; ++i)
            if (!m[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel == r) continue;
        std::swap(m[row], m[sel]);
        FieldElem inv = m[row][col].inv();
        for (size_t j = col; j < c; ++j) m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            FieldElem t = m[i][col];
            for (size_t j = col; j < c; ++j) m[i][j] = m[i][j] - t * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(Mat m) {
    if (m.empty() || m[0].empty()) return 0;
    return rref(m).size();
}

FieldElem det(Mat m) {
    size_t n = nrows(m);
    if (n != ncols(m)) fail(ErrorKind::internal, "det: not square");
    Field f = field_of(m);
    FieldElem d = FieldElem::one(f);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = n;
        for (size_t i = col; i < n; ++i)
            if (!m[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel == n) return FieldElem::zero(f);
        if (sel != col) {
            std::swap(m[col], m[sel]);
            d = -d;
        }
        d = d * m[col][col];
        FieldElem inv = m[col][col].inv();
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            FieldElem t = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] = m[i][j] - t * m[col][j];
        }
    }
    return d;
}

std::vector<Vec> nullspace(Mat m) {
    size_t c = ncols(m);
    Field f = m.empty() || m[0].empty() ? Field::rationals() : field_of(m);
    if (m.empty() || c == 0) {
        // no constraints: standard basis
        std::vector<Vec> basis;
        for (size_t j = 0; j < c; ++j) {
            Vec v(c, FieldElem::zero(f));
            v[j] = FieldElem::one(f);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(c, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < c; ++free) {
        if (is_pivot[free]) continue;
        Vec v(c, FieldElem::zero(f));
        v[free] = FieldElem::one(f);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Mat a, Vec b) {
    size_t r = nrows(a), c = ncols(a);
    if (r != b.size()) fail(ErrorKind::internal, "solve: shape mismatch");
    Field f = r && c ? field_of(a) : (b.empty() ? Field::rationals() : b[0].field());
    for (size_t i = 0; i < r; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(a);
    if (!pivots.empty() && pivots.back() == c) return std::nullopt;
    Vec x(c, FieldElem::zero(f));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][c];
    return x;
}

std::optional<Mat> inverse(Mat m) {
    size_t n = nrows(m);
    if (n != ncols(m)) fail(ErrorKind::internal, "inverse: not square");
    if (n == 0) return m;
    Field f = field_of(m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            m[i].push_back(i == j ? FieldElem::one(f) : FieldElem::zero(f));
    }
    std::vector<size_t> pivots = rref(m);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat out = zeros(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

std::vector<FieldElem> charpoly(const Mat& a) {
    size_t n = nrows(a);
    if (n != ncols(a)) fail(ErrorKind::internal, "charpoly: not square");
    if (n == 0) return {};
    Field f = field_of(a);
    const FieldElem one = FieldElem::one(f), zero = FieldElem::zero(f);
    // v[k] holds the coefficient of x^(i+1-k) for the leading principal block
    std::vector<FieldElem> v{one, -a[0][0]};
    for (size_t i = 1; i < n; ++i) {
        std::vector<FieldElem> tcol{one, -a[i][i]};
        Vec s(i, zero);
        for (size_t j = 0; j < i; ++j) s[j] = a[j][i];
        for (size_t k = 0; k < i; ++k) {
            FieldElem dot = zero;
            for (size_t j = 0; j < i; ++j) dot = dot + a[i][j] * s[j];
            tcol.push_back(-dot);
            if (k + 1 < i) {
                Vec ns(i, zero);
                for (size_t r = 0; r < i; ++r)
                    for (size_t j = 0; j < i; ++j) ns[r] = ns[r] + a[r][j] * s[j];
                s = std::move(ns);
            }
        }
        std::vector<FieldElem> nv(i + 2, zero);
        for (size_t j = 0; j < i + 2; ++j)
            for (size_t k = 0; k < v.size() && k <= j; ++k)
                if (j - k < tcol.size()) nv[j] = nv[j] + tcol[j - k] * v[k];
        v = std::move(nv);
    }
    std::vector<FieldElem> out(n + 1, zero);
    for (size_t k = 0; k <= n; ++k) out[k] = v[n - k];
    return out;
}

namespace {

// dense univariate polynomials over a field, only what the pencil code needs
struct UPoly {
    Field f;
    std::vector<FieldElem> c; // c[k] is the coefficient of t^k; no trailing zeros

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool zero() const { return c.empty(); }
};

UPoly up_const(const Field& f, const FieldElem& e) {
    UPoly p{f, {}};
    if (!e.is_zero()) p.c.push_back(e);
    return p;
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
    UPoly r{a.f, {}};
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.assign(n, FieldElem::zero(a.f));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    UPoly r{a.f, {}};
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, FieldElem::zero(a.f));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    return r;
}

// exact division; the fraction-free elimination guarantees divisibility
UPoly up_div(UPoly a, const UPoly& b) {
    if (b.zero()) fail(ErrorKind::internal, "up_div: zero divisor");
    UPoly q{a.f, {}};
    if (a.zero()) return q;
    if (a.c.size() < b.c.size()) fail(ErrorKind::internal, "up_div: not divisible");
    q.c.assign(a.c.size() - b.c.size() + 1, FieldElem::zero(a.f));
    FieldElem lead_inv = b.c.back().inv();
    for (size_t k = q.c.size(); k-- > 0;) {
        FieldElem coef = a.c[k + b.c.size() - 1] * lead_inv;
        q.c[k] = coef;
        if (coef.is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            a.c[k + j] = a.c[k + j] - coef * b.c[j];
    }
    for (const auto& e : a.c)
        if (!e.is_zero()) fail(ErrorKind::internal, "up_div: nonzero remainder");
    q.trim();
    return q;
}

// fraction-free elimination with full pivoting; returns (rank, final pivot = det up to sign when square and full rank)
std::pair<size_t, UPoly> bareiss(std::vector<std::vector<UPoly>> m) {
    size_t r = m.size(), c = r ? m[0].size() : 0;
    Field f = r && c ? m[0][0].f : Field::rationals();
    UPoly prev = up_const(f, FieldElem::one(f));
    UPoly last = prev;
    size_t k = 0;
    int sign = 1;
    for (; k < std::min(r, c); ++k) {
        size_t pi = r, pj = c;
        for (size_t i = k; i < r && pi == r; ++i)
            for (size_t j = k; j < c; ++j)
                if (!m[i][j].zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == r) break;
        if (pi != k) {
            std::swap(m[pi], m[k]);
            sign = -sign;
        }
        if (pj != k) {
            for (size_t i = 0; i < r; ++i) std::swap(m[i][pj], m[i][k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < r; ++i)
            for (size_t j = k + 1; j < c; ++j)
                m[i][j] = up_div(up_sub(up_mul(m[k][k], m[i][j]), up_mul(m[i][k], m[k][j])), prev);
        prev = m[k][k];
        last = prev;
    }
    if (sign < 0 && !last.zero())
        for (auto& e : last.c) e = -e;
    return {k, last};
}

std::vector<std::vector<UPoly>> pencil_entries(const Mat& a, const Mat& b) {
    size_t r = nrows(a), c = ncols(a);
    if (r != nrows(b) || c != ncols(b)) fail(ErrorKind::internal, "pencil: shape mismatch");
    Field f = r && c ? field_of(a) : Field::rationals();
    std::vector<std::vector<UPoly>> m(r, std::vector<UPoly>(c, UPoly{f, {}}));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            UPoly p{f, {a[i][j], b[i][j]}};
            p.trim();
            m[i][j] = p;
        }
    return m;
}

} // namespace

size_t generic_rank(const Mat& a, const Mat& b) {
    if (nrows(a) == 0 || ncols(a) == 0) return 0;
    return bareiss(pencil_entries(a, b)).first;
}

} // namespace minorkit::la
