#include "ydn/braided.hpp"

#include "ydn/errors.hpp"

namespace ydn {

namespace {

long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

BraidedSpace braided_of(const YDModule& M) {
    BraidedSpace V;
    V.dim = M.dim();
    V.braid = yd_braiding(M, M);
    V.component = M.component;
    return V;
}

void validate_braiding(const Mat& braid, int dim) {
    if (braid.rows() != dim * dim || braid.cols() != dim * dim)
        throw input_error("braiding must be a square matrix on the tensor square");
    if (linalg::rank(braid) != dim * dim) throw input_error("braiding is not invertible");
    Mat c1 = braid_at(braid, dim, 3, 1);
    Mat c2 = braid_at(braid, dim, 3, 2);
    if (!linalg::is_zero_mat(linalg::mul_sparse(linalg::mul_sparse(c1, c2), c1) -
                             linalg::mul_sparse(linalg::mul_sparse(c2, c1), c2)))
        throw input_error("braid relation fails");
}

Mat braid_at(const Mat& braid, int dim, int n, int i) {
    return linalg::kron(linalg::kron(linalg::identity((int)ipow(dim, i - 1)), braid),
                        linalg::identity((int)ipow(dim, n - i - 1)));
}

Mat block_braiding(const Mat& braid, int dim, int r, int s) {
    const int n = r + s;
    const long N = ipow(dim, n);
    if (r == 0 || s == 0) return linalg::identity((int)N);
    // move the last factor of the first block to the end, then recurse
    Mat move = braid_at(braid, dim, n, r);
    for (int i = r + 1; i <= n - 1; ++i) move = linalg::mul_sparse(braid_at(braid, dim, n, i), move);
    return linalg::mul_sparse(
        linalg::kron(block_braiding(braid, dim, r - 1, s), linalg::identity(dim)), move);
}

std::vector<Mat> symmetrizers(const Mat& braid, int dim, int cutoff) {
    std::vector<Mat> S;
    S.reserve(cutoff + 1);
    S.push_back(linalg::identity(1));
    for (int n = 1; n <= cutoff; ++n) {
        const long N = ipow(dim, n);
        Mat T = linalg::identity((int)N);
        Mat prod = linalg::identity((int)N);
        for (int k = n - 1; k >= 1; --k) {
            prod = linalg::mul_sparse(prod, braid_at(braid, dim, n, k));
            T += prod;
        }
        S.push_back(linalg::mul_sparse(linalg::kron(S[n - 1], linalg::identity(dim)), T));
    }
    return S;
}

}  // namespace ydn
