#include "ydn/linalg.hpp"

namespace ydn {
namespace linalg {

Echelon rref(const Mat& A) {
    Echelon e;
    e.rref = A;
    Mat& m = e.rref;
    const int rows = (int)m.rows(), cols = (int)m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        cyc inv = m(r, c).inv();
        for (int j = c; j < cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            cyc f = m(i, c);
            for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

int rank(const Mat& A) { return rref(A).rank; }

Mat kernel(const Mat& A) {
    Echelon e = rref(A);
    const int cols = (int)A.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    Mat K = zero(cols, cols - e.rank);
    int out = 0;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        K(f, out) = cyc(1);
        for (int r = 0; r < e.rank; ++r) K(e.pivots[r], out) = -e.rref(r, f);
        ++out;
    }
    return K;
}

Mat solve(const Mat& A, const Mat& B, bool* ok) {
    if (A.rows() != B.rows()) throw arithmetic_error("solve: row mismatch");
    const int n = (int)A.cols(), k = (int)B.cols();
    Mat aug(A.rows(), n + k);
    aug.leftCols(n) = A;
    aug.rightCols(k) = B;
    Echelon e = rref(aug);
    if (ok) *ok = true;
    for (int p : e.pivots) {
        if (p >= n) {  // pivot inside the RHS block: inconsistent
            if (ok) {
                *ok = false;
                return Mat();
            }
            throw arithmetic_error("solve: inconsistent system");
        }
    }
    Mat X = zero(n, k);
    for (int r = 0; r < e.rank; ++r)
        for (int j = 0; j < k; ++j) X(e.pivots[r], j) = e.rref(r, n + j);
    return X;
}

Mat inverse(const Mat& A) {
    if (A.rows() != A.cols()) throw singular_error("inverse: not square");
    bool ok = true;
    Mat X = solve(A, identity((int)A.rows()), &ok);
    if (!ok) throw singular_error("inverse: singular matrix");
    // Rank check: solve() succeeds consistently only when A has full rank here,
    // but guard against a rank-deficient consistent fluke anyway.
    if (!is_zero_mat(A * X - identity((int)A.rows()))) throw singular_error("inverse: singular matrix");
    return X;
}

std::vector<int> independent_columns(const Mat& A) { return rref(A).pivots; }

Mat identity(int n) {
    Mat m = zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = cyc(1);
    return m;
}

Mat zero(int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = cyc(0);
    return m;
}

Mat mul_sparse(const Mat& A, const Mat& B) {
    Mat out = zero((int)A.rows(), (int)B.cols());
    for (int j = 0; j < B.cols(); ++j)
        for (int i = 0; i < B.rows(); ++i) {
            if (B(i, j).is_zero()) continue;
            for (int r = 0; r < A.rows(); ++r) {
                if (A(r, i).is_zero()) continue;
                out(r, j) += A(r, i) * B(i, j);
            }
        }
    return out;
}

Mat kron(const Mat& A, const Mat& B) {
    Mat K = zero((int)(A.rows() * B.rows()), (int)(A.cols() * B.cols()));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            if (A(i, j).is_zero()) continue;
            for (int p = 0; p < B.rows(); ++p)
                for (int q = 0; q < B.cols(); ++q) {
                    if (B(p, q).is_zero()) continue;
                    K(i * B.rows() + p, j * B.cols() + q) = A(i, j) * B(p, q);
                }
        }
    return K;
}

Mat kron_chain(const std::vector<Mat>& factors) {
    if (factors.empty()) {
        Mat one = zero(1, 1);
        one(0, 0) = cyc(1);
        return one;
    }
    Mat acc = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
    return acc;
}

bool is_zero_mat(const Mat& A) {
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (!A(i, j).is_zero()) return false;
    return true;
}

bool in_col_span(const Mat& basis, const Mat& v) {
    if (basis.cols() == 0) return is_zero_mat(v);
    bool ok = true;
    solve(basis, v, &ok);
    return ok;
}

Mat col_space_basis(const Mat& A) {
    std::vector<int> idx = independent_columns(A);
    Mat B = zero((int)A.rows(), (int)idx.size());
    for (size_t j = 0; j < idx.size(); ++j) B.col((int)j) = A.col(idx[j]);
    return B;
}

Mat span_intersection(const Mat& A, const Mat& B) {
    // Solve A x = B y; kernel of [A | -B] projected to the A-part.
    if (A.cols() == 0 || B.cols() == 0) return zero((int)A.rows(), 0);
    Mat aug = zero((int)A.rows(), (int)(A.cols() + B.cols()));
    aug.leftCols(A.cols()) = A;
    aug.rightCols(B.cols()) = -B;
    Mat K = kernel(aug);
    Mat inter = A * K.topRows(A.cols());
    return col_space_basis(inter);
}

bool same_col_span(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) return false;
    for (int j = 0; j < B.cols(); ++j)
        if (!in_col_span(A, Mat(B.col(j)))) return false;
    for (int j = 0; j < A.cols(); ++j)
        if (!in_col_span(B, Mat(A.col(j)))) return false;
    return true;
}

}  // namespace linalg
}  // namespace ydn
