#include "ydn/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ydn {

namespace {

long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

const Mat kEmpty = Mat(0, 0);

}  // namespace

NicholsTruncation::NicholsTruncation(const YDModule& M, int cutoff, AlgebraKind kind)
    : kind_(kind),
      module_backed_(true),
      base_(M),
      d_(M.dim()),
      cutoff_(cutoff),
      braid_(yd_braiding(M, M)),
      G_(M.G),
      gdeg_(M.degree),
      comp_(M.component),
      act1_(M.action) {
    if (comp_.empty()) comp_.assign(d_, 0);
    ncomp_ = comp_.empty() ? 1 : *std::max_element(comp_.begin(), comp_.end()) + 1;
    build();
}

NicholsTruncation::NicholsTruncation(const BraidedSpace& V, int cutoff, AlgebraKind kind)
    : kind_(kind), module_backed_(false), d_(V.dim), cutoff_(cutoff), braid_(V.braid) {
    validate_braiding(braid_, d_);
    comp_ = V.component;
    if (comp_.empty()) comp_.assign(d_, 0);
    ncomp_ = comp_.empty() ? 1 : *std::max_element(comp_.begin(), comp_.end()) + 1;
    build();
}

void NicholsTruncation::build() {
    if (cutoff_ < 0) throw input_error("cutoff must be nonnegative");
    sym_.resize(cutoff_ + 1);
    pivots_.resize(cutoff_ + 1);
    P_.resize(cutoff_ + 1);
    S_.resize(cutoff_ + 1);
    if (module_backed_) {
        D_.resize(cutoff_ + 1);
        antipode_.assign(cutoff_ + 1, kEmpty);
        actpow_.assign(G_->order(), std::vector<Mat>(cutoff_ + 1));
    }

    for (int n = 0; n <= cutoff_; ++n) {
        const long N = ipow(d_, n);

        if (n == 0) {
            sym_[0] = linalg::identity(1);
        } else if (complete_) {
            // rank 0 in a lower degree forces rank 0 here (degree 1 generates)
            sym_[n] = linalg::zero((int)N, (int)N);
        } else {
            Mat T = linalg::identity((int)N);
            Mat prod = linalg::identity((int)N);
            for (int k = n - 1; k >= 1; --k) {
                prod = linalg::mul_sparse(prod, braid_at(braid_, d_, n, k));
                T += prod;
            }
            sym_[n] = linalg::mul_sparse(linalg::kron(sym_[n - 1], linalg::identity(d_)), T);
        }

        if (kind_ == AlgebraKind::tensor) {
            pivots_[n].resize(N);
            std::iota(pivots_[n].begin(), pivots_[n].end(), 0);
            P_[n] = linalg::identity((int)N);
            S_[n] = linalg::identity((int)N);
        } else if (complete_) {
            pivots_[n].clear();
            P_[n] = linalg::zero(0, (int)N);
            S_[n] = linalg::zero((int)N, 0);
        } else {
            linalg::Echelon ech = linalg::rref(sym_[n]);
            pivots_[n] = ech.pivots;
            // pivot columns of the reduced form carry each word's coordinates
            P_[n] = ech.rref.topRows(ech.rank);
            S_[n] = linalg::zero((int)N, ech.rank);
            for (int k = 0; k < ech.rank; ++k) S_[n](pivots_[n][k], k) = cyc(1);
        }

        if (!pivots_[n].empty()) top_ = n;
        if (pivots_[n].empty() && !complete_) complete_ = true;

        if (!module_backed_ || (int)pivots_[n].size() == 0) continue;

        for (int g = 0; g < G_->order(); ++g)
            actpow_[g][n] = n == 0 ? linalg::identity(1)
                                   : linalg::kron(actpow_[g][n - 1], act1_[g]);

        D_[n].resize(n + 1);
        for (int a = 0; a <= n; ++a) {
            const int b = n - a;
            if (a == 0 || b == 0) {
                D_[n][a] = linalg::identity((int)N);
                continue;
            }
            const long Nr = ipow(d_, n - 1);
            const long blk2 = ipow(d_, b - 1);
            Mat Dn = linalg::zero((int)N, (int)N);
            const Mat& first = D_[n - 1][a - 1];  // component (a-1, b)
            const Mat& second = D_[n - 1][a];     // component (a, b-1)
            for (long w = 0; w < N; ++w) {
                const int x = (int)(w / Nr);
                const long u = w % Nr;
                for (long t = 0; t < Nr; ++t)
                    if (!first(t, u).is_zero()) Dn(x * Nr + t, w) += first(t, u);
                const Mat& act = actpow_[gdeg_[x]][a];
                for (long t = 0; t < Nr; ++t) {
                    if (second(t, u).is_zero()) continue;
                    const long v1 = t / blk2;
                    const long v2 = t % blk2;
                    for (int v1p = 0; v1p < act.rows(); ++v1p) {
                        if (act(v1p, v1).is_zero()) continue;
                        Dn(v1p * ipow(d_, b) + x * blk2 + v2, w) += act(v1p, v1) * second(t, u);
                    }
                }
            }
            D_[n][a] = Dn;
        }

        if (n == 0) {
            antipode_[0] = linalg::identity(1);
        } else {
            Mat A = linalg::zero(dim(n), dim(n));
            for (int a = 0; a < n; ++a)
                A -= mult(a, n - a) * linalg::kron(antipode_[a], linalg::identity(dim(n - a))) *
                     comult(a, n - a);
            antipode_[n] = A;
        }
    }
}

void NicholsTruncation::require_module() const {
    if (!module_backed_) throw input_error("operation requires a module-backed truncation");
}

const YDModule& NicholsTruncation::base() const {
    require_module();
    return base_;
}

int NicholsTruncation::check_degree(int n) const {
    if (n < 0) throw input_error("negative degree");
    if (n <= cutoff_) return (int)pivots_[n].size();
    if (complete_) return 0;
    throw cutoff_exceeded("degree " + std::to_string(n) + " exceeds the cutoff " +
                          std::to_string(cutoff_));
}

int NicholsTruncation::dim(int n) const { return check_degree(n); }

const Mat& NicholsTruncation::symmetrizer(int n) const {
    if (n < 0 || n > cutoff_) throw cutoff_exceeded("symmetrizer beyond the cutoff");
    return sym_[n];
}

const std::vector<int>& NicholsTruncation::basis_words(int n) const {
    if (n < 0 || n > cutoff_) throw cutoff_exceeded("basis words beyond the cutoff");
    return pivots_[n];
}

const Mat& NicholsTruncation::section(int n) const {
    if (n < 0 || n > cutoff_) throw cutoff_exceeded("section beyond the cutoff");
    return S_[n];
}

const Mat& NicholsTruncation::projection(int n) const {
    if (n < 0 || n > cutoff_) throw cutoff_exceeded("projection beyond the cutoff");
    return P_[n];
}

Mat NicholsTruncation::mult(int a, int b) const {
    const int da = check_degree(a), db = check_degree(b);
    const int dab = check_degree(a + b);
    if (da == 0 || db == 0 || dab == 0) return linalg::zero(dab, da * db);
    Mat m = linalg::zero(dab, da * db);
    const long shift = ipow(d_, b);
    for (int p = 0; p < da; ++p)
        for (int q = 0; q < db; ++q)
            m.col(p * db + q) = P_[a + b].col(pivots_[a][p] * shift + pivots_[b][q]);
    return m;
}

Mat NicholsTruncation::comult(int a, int b) const {
    require_module();
    const int da = check_degree(a), db = check_degree(b);
    const int dab = check_degree(a + b);
    if (da == 0 || db == 0 || dab == 0) return linalg::zero(da * db, dab);
    return linalg::mul_sparse(linalg::kron(P_[a], P_[b]),
                              linalg::mul_sparse(D_[a + b][a], S_[a + b]));
}

Mat NicholsTruncation::quotient_braiding(int a, int b) const {
    const int da = check_degree(a), db = check_degree(b);
    if (da == 0 || db == 0) return linalg::zero(db * da, da * db);
    Mat w = block_braiding(braid_, d_, a, b);
    return linalg::mul_sparse(linalg::kron(P_[b], P_[a]),
                              linalg::mul_sparse(w, linalg::kron(S_[a], S_[b])));
}

const Mat& NicholsTruncation::antipode(int n) const {
    require_module();
    if (check_degree(n) == 0) return kEmpty;
    return antipode_[n];
}

Mat NicholsTruncation::antipode_inv(int n) const {
    require_module();
    if (check_degree(n) == 0) return kEmpty;
    return linalg::inverse(antipode_[n]);
}

Mat NicholsTruncation::h_action(int g, int n) const {
    require_module();
    const int k = check_degree(n);
    if (k == 0) return linalg::zero(0, 0);
    return linalg::mul_sparse(P_[n], linalg::mul_sparse(actpow_[g][n], S_[n]));
}

Mat NicholsTruncation::theta(int n) const {
    require_module();
    const int k = check_degree(n);
    if (k == 0) return linalg::zero(0, 0);
    const long N = ipow(d_, n);
    Mat th = linalg::zero((int)N, (int)N);
    for (long w = 0; w < N; ++w) th.col(w) = actpow_[G_->inv(word_gdeg(n, (int)w))][n].col(w);
    return linalg::mul_sparse(P_[n], linalg::mul_sparse(th, S_[n]));
}

Mat NicholsTruncation::theta_inv(int n) const {
    require_module();
    const int k = check_degree(n);
    if (k == 0) return linalg::zero(0, 0);
    const long N = ipow(d_, n);
    Mat th = linalg::zero((int)N, (int)N);
    for (long w = 0; w < N; ++w) th.col(w) = actpow_[word_gdeg(n, (int)w)][n].col(w);
    return linalg::mul_sparse(P_[n], linalg::mul_sparse(th, S_[n]));
}

const Mat& NicholsTruncation::tensor_comult(int a, int b) const {
    require_module();
    if (a < 0 || b < 0 || a + b > cutoff_ || (int)D_[a + b].size() != a + b + 1)
        throw cutoff_exceeded("word-level comultiplication not computed for this degree");
    return D_[a + b][a];
}

std::vector<int> NicholsTruncation::word_digits(int n, int w) const {
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = w % d_;
        w /= d_;
    }
    return digits;
}

int NicholsTruncation::word_gdeg(int n, int w) const {
    require_module();
    int g = G_->id();
    for (int letter : word_digits(n, w)) g = G_->mul(g, gdeg_[letter]);
    return g;
}

std::vector<int> NicholsTruncation::word_multidegree(int n, int w) const {
    std::vector<int> m(ncomp_, 0);
    for (int letter : word_digits(n, w)) ++m[comp_[letter]];
    return m;
}

int NicholsTruncation::basis_gdeg(int n, int k) const { return word_gdeg(n, basis_words(n)[k]); }

std::vector<int> NicholsTruncation::basis_multidegree(int n, int k) const {
    return word_multidegree(n, basis_words(n)[k]);
}

std::map<std::vector<int>, int> NicholsTruncation::dims_by_multidegree(int n) const {
    std::map<std::vector<int>, int> out;
    if (check_degree(n) == 0) return out;
    for (int w : pivots_[n]) ++out[word_multidegree(n, w)];
    return out;
}

Mat NicholsTruncation::primitives(int n) const {
    require_module();
    const int k = check_degree(n);
    if (n == 0) return linalg::zero(1, 0);
    if (k == 0) return linalg::zero(0, 0);
    if (n == 1) return linalg::identity(k);
    int rows = 0;
    for (int a = 1; a < n; ++a) rows += dim(a) * dim(n - a);
    Mat stack = linalg::zero(rows, k);
    int r = 0;
    for (int a = 1; a < n; ++a) {
        Mat c = comult(a, n - a);
        stack.middleRows(r, (int)c.rows()) = c;
        r += (int)c.rows();
    }
    return linalg::kernel(stack);
}

Mat NicholsTruncation::ad_letter(int i, int n) const {
    require_module();
    const int dn = check_degree(n);
    const int dn1 = check_degree(n + 1);
    Mat ad = linalg::zero(dn1, dn);
    if (dn == 0 || dn1 == 0) return ad;
    Mat m1 = mult(1, n);
    Mat mn = mult(n, 1);
    Mat act = h_action(gdeg_[i], n);
    for (int q = 0; q < dn; ++q) {
        ad.col(q) += m1.col(i * dn + q);
        for (int p = 0; p < dn; ++p)
            if (!act(p, q).is_zero()) ad.col(q) -= act(p, q) * mn.col(p * d_ + i);
    }
    return ad;
}

YDModule degree_module(const NicholsTruncation& B, int n) {
    const YDModule& base = B.base();
    YDModule M;
    M.G = base.G;
    const int k = B.dim(n);
    M.degree.reserve(k);
    for (int i = 0; i < k; ++i) M.degree.push_back(B.basis_gdeg(n, i));
    M.action.reserve(base.G->order());
    for (int g = 0; g < base.G->order(); ++g) M.action.push_back(B.h_action(g, n));
    return M;
}

}  // namespace ydn
