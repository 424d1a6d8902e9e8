#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ydn/braided.hpp"
#include "ydn/errors.hpp"
#include "ydn/group.hpp"
#include "ydn/linalg.hpp"
#include "ydn/ydmodule.hpp"

namespace ydn {

enum class AlgebraKind {
    nichols,  // quotient by the symmetrizer kernels
    tensor    // free algebra, every word is a basis element
};

/**
 * @brief Degreewise truncation of the Nichols algebra of a braided space.
 *
 * Degree n is realized as V^{(x)n} / ker S_n with the canonical basis given
 * by the lexicographically first independent columns of the symmetrizer S_n
 * (the words indexing those columns). `section` includes a basis word,
 * `projection` writes a word's class in the basis; all structure maps are
 * exact matrices between those coordinates.
 *
 * When some degree <= cutoff vanishes, the algebra is finite-dimensional
 * (degree 1 generates, so all later degrees vanish too): `complete()` turns
 * true and every accessor beyond the cutoff degenerates gracefully instead
 * of throwing cutoff_exceeded.
 *
 * Hopf-theoretic maps (comultiplication, antipode, theta, the group action)
 * require the module constructor; the braided-space constructor only
 * provides dimensions, words and products.
 */
class NicholsTruncation {
public:
    NicholsTruncation(const YDModule& M, int cutoff, AlgebraKind kind = AlgebraKind::nichols);
    NicholsTruncation(const BraidedSpace& V, int cutoff, AlgebraKind kind = AlgebraKind::nichols);

    int cutoff() const { return cutoff_; }
    int letters() const { return d_; }
    AlgebraKind kind() const { return kind_; }
    bool module_backed() const { return module_backed_; }
    const YDModule& base() const;
    const Mat& braiding() const { return braid_; }

    bool complete() const { return complete_; }
    /// Largest degree with a nonzero component; only meaningful when complete.
    int top_degree() const { return top_; }

    int dim(int n) const;
    const Mat& symmetrizer(int n) const;
    const std::vector<int>& basis_words(int n) const;
    const Mat& section(int n) const;
    const Mat& projection(int n) const;

    /// Product B(a) (x) B(b) -> B(a+b); pair index (p,q) -> p*dim(b)+q.
    Mat mult(int a, int b) const;
    /// Component B(a+b) -> B(a) (x) B(b) of the comultiplication.
    Mat comult(int a, int b) const;
    const Mat& antipode(int n) const;
    Mat antipode_inv(int n) const;
    /// Action of a group element on degree n (the quotient is stable).
    Mat h_action(int g, int n) const;
    /// theta(v) = deg(v)^{-1} . v on degree n, and its inverse.
    Mat theta(int n) const;
    Mat theta_inv(int n) const;

    /// Word-level comultiplication component on V^{(x)(a+b)}.
    const Mat& tensor_comult(int a, int b) const;

    /// Braiding B(a) (x) B(b) -> B(b) (x) B(a) induced on the quotient.
    Mat quotient_braiding(int a, int b) const;

    std::vector<int> word_digits(int n, int w) const;
    int word_gdeg(int n, int w) const;
    std::vector<int> word_multidegree(int n, int w) const;
    int basis_gdeg(int n, int k) const;
    std::vector<int> basis_multidegree(int n, int k) const;
    int components() const { return ncomp_; }
    std::map<std::vector<int>, int> dims_by_multidegree(int n) const;

    /// Intersection of the kernels of all proper comultiplication components.
    Mat primitives(int n) const;
    /// (ad x_i): B(n) -> B(n+1), x -> x_i x - (deg(x_i) . x) x_i.
    Mat ad_letter(int i, int n) const;

private:
    void build();
    void require_module() const;
    int check_degree(int n) const;  // returns dim, throws above cutoff unless complete

    AlgebraKind kind_;
    bool module_backed_ = false;
    YDModule base_;
    int d_ = 0;
    int cutoff_ = 0;
    Mat braid_;
    std::shared_ptr<const FiniteGroup> G_;
    std::vector<int> gdeg_;
    std::vector<int> comp_;
    int ncomp_ = 1;
    std::vector<Mat> act1_;

    std::vector<Mat> sym_;
    std::vector<std::vector<int>> pivots_;
    std::vector<Mat> P_, S_;
    std::vector<std::vector<Mat>> D_;       // D_[n][a]: component (a, n-a) on words
    std::vector<std::vector<Mat>> actpow_;  // actpow_[g][n]: tensor power action
    std::vector<Mat> antipode_;
    bool complete_ = false;
    int top_ = 0;
};

/// Degree n of the truncation as a Yetter-Drinfeld module.
YDModule degree_module(const NicholsTruncation& B, int n);

}  // namespace ydn
