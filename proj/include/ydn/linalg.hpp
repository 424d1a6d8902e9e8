#pragma once

#include <vector>

#include "ydn/cyclotomic.hpp"

namespace ydn {
namespace linalg {

/// Thrown when a square system is singular but an inverse was requested.
class singular_error : public arithmetic_error {
public:
    explicit singular_error(const std::string& what) : arithmetic_error(what) {}
};

struct Echelon {
    Mat rref;                 // reduced row echelon form (unique for the row space)
    std::vector<int> pivots;  // pivot column of each pivot row, increasing
    int rank = 0;
};

/**
 * @brief Reduced row echelon form with deterministic pivoting.
 *
 * Columns are processed left to right; the pivot row is the first remaining
 * row with a nonzero entry in the current column. The result (and hence every
 * derived object: rank, pivot columns, kernel basis) is canonical: RREF is
 * unique for a given row space, and column j is a pivot iff it is linearly
 * independent of columns 0..j-1.
 */
Echelon rref(const Mat& A);

int rank(const Mat& A);

/**
 * @brief Canonical null space basis.
 *
 * One column per free column f of rref(A), carrying 1 in coordinate f and
 * -rref(r, f) in each pivot coordinate; free columns in increasing order.
 */
Mat kernel(const Mat& A);

/// Solve A X = B. Returns the particular solution with free variables = 0;
/// sets *ok = false (and returns an empty matrix) if the system is inconsistent.
Mat solve(const Mat& A, const Mat& B, bool* ok);

/// Inverse of a square matrix; throws singular_error when rank deficient.
Mat inverse(const Mat& A);

/// Lexicographically first maximal independent column set (= pivot columns of rref).
std::vector<int> independent_columns(const Mat& A);

Mat identity(int n);
Mat zero(int rows, int cols);

/// A*B computed by iterating only the nonzero entries of B; much faster than
/// the dense product when B is monomial-like (braid operators, sections).
Mat mul_sparse(const Mat& A, const Mat& B);

/// Kronecker product, row-major pair indexing: (i,j) -> i*rows(B)+j.
Mat kron(const Mat& A, const Mat& B);
Mat kron_chain(const std::vector<Mat>& factors);

bool is_zero_mat(const Mat& A);

/// True when v lies in the column span of basis.
bool in_col_span(const Mat& basis, const Mat& v);

/// Deterministic basis of the column space: the pivot columns themselves.
Mat col_space_basis(const Mat& A);

/// Intersection of two column spans, as a canonical basis matrix.
Mat span_intersection(const Mat& A, const Mat& B);

/// True when the column spans coincide.
bool same_col_span(const Mat& A, const Mat& B);

}  // namespace linalg
}  // namespace ydn
