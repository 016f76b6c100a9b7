#pragma once

#include <optional>
#include <vector>

#include "minorkit/field.hpp"

// dense exact linear algebra over a Field; internal to the library
namespace minorkit::la {

using Vec = std::vector<FieldElem>;
using Mat = std::vector<Vec>;

Mat zeros(const Field& f, size_t r, size_t c);
Mat identity(const Field& f, size_t n);
size_t nrows(const Mat& m);
size_t ncols(const Mat& m);

Mat mul(const Mat& a, const Mat& b);
Vec mul_vec(const Mat& a, const Vec& v);
Mat transpose(const Mat& m);
Mat add(const Mat& a, const Mat& b);
Mat scaled(const Mat& a, const FieldElem& c);

// reduced row echelon form in place; returns the pivot columns
std::vector<size_t> rref(Mat& m);
size_t rank(Mat m);
FieldElem det(Mat m);

// kernel basis, one vector per free column in ascending column order
std::vector<Vec> nullspace(Mat m);
// one solution of a x = b with free variables set to zero, or nullopt
std::optional<Vec> solve(Mat a, Vec b);
std::optional<Mat> inverse(Mat m);

// Berkowitz division-free characteristic polynomial of a square matrix:
// coefficient of x^k in det(x I - m) is at index k; monic of degree n
std::vector<FieldElem> charpoly(const Mat& m);

// rank of a + t b over the rational function field K(t)
size_t generic_rank(const Mat& a, const Mat& b);

} // namespace minorkit::la
