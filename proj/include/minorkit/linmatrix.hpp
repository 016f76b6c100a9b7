#pragma once

#include <array>
#include <vector>

#include "minorkit/poly.hpp"

namespace minorkit {

// A 2xN matrix of linear forms. Columns carry labels label_base .. label_base+N-1;
// the zero-diagonal family is labeled from 0, everything else from 1.
class LinMatrix {
  public:
    LinMatrix(RingPtr ring, std::vector<std::array<Polynomial, 2>> cols, int label_base = 1);

    const RingPtr& ring() const { return ring_; }
    size_t ncols() const { return cols_.size(); }
    int label_base() const { return base_; }
    int label_end() const { return base_ + static_cast<int>(cols_.size()); }

    // row is 0 or 1, label is a column label.
    const Polynomial& at(int row, int label) const;
    const std::array<Polynomial, 2>& col(size_t index) const { return cols_[index]; }

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<std::array<Polynomial, 2>> cols_;
    int base_;
};

// [i,j] = row0(i)*row1(j) - row0(j)*row1(i); antisymmetric, zero on i == j.
Polynomial minor2(const LinMatrix& m, int i, int j);

// All [i,j] with i < j, lexicographic in (i, j). Zero minors are dropped.
std::vector<Polynomial> all_minors2(const LinMatrix& m);

// Generic 2xn: row0 = x1..xn, row1 = x(n+1)..x(2n), labels from 1.
LinMatrix generic_matrix(int n, const Field& f, MonomialOrder o = MonomialOrder::degrevlex);

// The zero-diagonal 2xn family (n >= 3): row0 = (0, x1..x(n-1)),
// row1 = (xn..x(2n-2), 0), labels from 0.
LinMatrix zero_diagonal_matrix(int n, const Field& f, MonomialOrder o = MonomialOrder::degrevlex);

// Submatrix keeping the given labels (order preserved); relabels from new_base.
LinMatrix submatrix(const LinMatrix& m, const std::vector<int>& labels, int new_base);

} // namespace minorkit
