#include "minorkit/linmatrix.hpp"

namespace minorkit {

LinMatrix::LinMatrix(RingPtr ring, std::vector<std::array<Polynomial, 2>> cols, int label_base)
    : ring_(std::move(ring)), cols_(std::move(cols)), base_(label_base) {
    if (cols_.empty()) fail(ErrorKind::degenerate_input, "matrix needs at least one column");
    for (const auto& c : cols_) {
        for (const auto& e : c) {
            check_same_ring(ring_, e.ring());
            if (!e.is_linear_form())
                fail(ErrorKind::nonlinear_entry, "matrix entry is not a linear form: " + e.str());
        }
    }
}

const Polynomial& LinMatrix::at(int row, int label) const {
    if (row < 0 || row > 1 || label < base_ || label >= label_end())
        fail(ErrorKind::degenerate_input, "matrix index out of range");
    return cols_[static_cast<size_t>(label - base_)][static_cast<size_t>(row)];
}

std::string LinMatrix::str() const {
    std::string s;
    for (int r = 0; r < 2; ++r) {
        for (size_t j = 0; j < cols_.size(); ++j) {
            s += cols_[j][r].str();
            if (j + 1 < cols_.size()) s += "; ";
        }
        s += "\n";
    }
    return s;
}

Polynomial minor2(const LinMatrix& m, int i, int j) {
    return m.at(0, i) * m.at(1, j) - m.at(0, j) * m.at(1, i);
}

std::vector<Polynomial> all_minors2(const LinMatrix& m) {
    std::vector<Polynomial> out;
    for (int i = m.label_base(); i < m.label_end(); ++i)
        for (int j = i + 1; j < m.label_end(); ++j) {
            Polynomial p = minor2(m, i, j);
            if (!p.is_zero()) out.push_back(std::move(p));
        }
    return out;
}

LinMatrix generic_matrix(int n, const Field& f, MonomialOrder o) {
    if (n < 1) fail(ErrorKind::degenerate_input, "generic matrix needs n >= 1");
    std::vector<std::string> vars;
    for (int i = 1; i <= 2 * n; ++i) vars.push_back("x" + std::to_string(i));
    RingPtr r = Ring::make(std::move(vars), f, o);
    std::vector<std::array<Polynomial, 2>> cols;
    for (int j = 0; j < n; ++j)
        cols.push_back({Polynomial::variable(r, static_cast<size_t>(j)),
                        Polynomial::variable(r, static_cast<size_t>(n + j))});
    return LinMatrix(r, std::move(cols), 1);
}

LinMatrix zero_diagonal_matrix(int n, const Field& f, MonomialOrder o) {
    if (n < 3) fail(ErrorKind::degenerate_input, "zero-diagonal matrix needs n >= 3");
    std::vector<std::string> vars;
    for (int i = 1; i <= 2 * n - 2; ++i) vars.push_back("x" + std::to_string(i));
    RingPtr r = Ring::make(std::move(vars), f, o);
    std::vector<std::array<Polynomial, 2>> cols;
    // column labels 0..n-1: col 0 = (0; xn), col j = (xj; x(n+j)) for 1<=j<=n-2,
    // col n-1 = (x(n-1); 0)
    cols.push_back({Polynomial::zero(r), Polynomial::variable(r, static_cast<size_t>(n - 1))});
    for (int j = 1; j <= n - 2; ++j)
        cols.push_back({Polynomial::variable(r, static_cast<size_t>(j - 1)),
                        Polynomial::variable(r, static_cast<size_t>(n - 1 + j))});
    cols.push_back({Polynomial::variable(r, static_cast<size_t>(n - 2)), Polynomial::zero(r)});
    return LinMatrix(r, std::move(cols), 0);
}

LinMatrix submatrix(const LinMatrix& m, const std::vector<int>& labels, int new_base) {
    std::vector<std::array<Polynomial, 2>> cols;
    for (int l : labels) cols.push_back({m.at(0, l), m.at(1, l)});
    return LinMatrix(m.ring(), std::move(cols), new_base);
}

} // namespace minorkit
