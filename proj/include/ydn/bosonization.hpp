#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ydn/nichols.hpp"

namespace ydn {

/// Basis element r#g: r is basis vector `idx` of the truncation in degree
/// `deg`, g the group element with index `grp`.
struct BKey {
    int deg = 0;
    int idx = 0;
    int grp = 0;

    friend bool operator<(const BKey& a, const BKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.idx != b.idx) return a.idx < b.idx;
        return a.grp < b.grp;
    }
    friend bool operator==(const BKey& a, const BKey& b) {
        return a.deg == b.deg && a.idx == b.idx && a.grp == b.grp;
    }
};

/// Sparse linear combinations; zero coefficients are never stored.
using BosonElement = std::map<BKey, cyc>;
using BosonPair = std::map<std::array<BKey, 2>, cyc>;
using BosonTriple = std::map<std::array<BKey, 3>, cyc>;

/**
 * @brief The ordinary Hopf algebra R#kG built on a Nichols truncation R.
 *
 * Elements are kept sparse; no structure-constant table is materialized.
 * Products whose degree leaves an incomplete truncation window throw
 * cutoff_exceeded; for a complete truncation all operations are global.
 */
class Bosonization {
public:
    Bosonization(const NicholsTruncation& R, std::shared_ptr<const FiniteGroup> H);

    const NicholsTruncation& truncation() const { return R_; }
    const FiniteGroup& group() const { return *G_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return G_; }
    int cutoff() const { return R_.cutoff(); }

    /// All r#g with r running over degree bases up to the cutoff.
    std::vector<BKey> basis() const;

    BosonElement unit() const;
    BosonElement group_elem(int g) const;
    BosonElement single(int deg, int idx, int g) const;
    /// (column vector in degree deg) # g, entries over the degree basis.
    BosonElement embed(int deg, const Mat& col, int g) const;
    /// Coefficient column of the R-part of a (asserts all terms sit in
    /// degree deg with group part e).
    Mat r_part(const BosonElement& a, int deg) const;

    BosonElement mul(const BosonElement& a, const BosonElement& b) const;
    BosonElement mul(const BosonElement& a, const BosonElement& b, const BosonElement& c) const;
    BosonPair comult(const BosonElement& a) const;
    BosonTriple comult2(const BosonElement& a) const;
    cyc counit(const BosonElement& a) const;
    BosonElement antipode(const BosonElement& a) const;
    BosonElement antipode_inv(const BosonElement& a) const;

    /// Hopf projection to the group algebra: r#h -> eps(r) h.
    BosonElement proj_pi(const BosonElement& a) const;
    /// Coalgebra projection to R: r#h -> r.
    BosonElement proj_vartheta(const BosonElement& a) const;
    /// Adjoint action of a group element: g a g^{-1}.
    BosonElement h_adjoint(int g, const BosonElement& a) const;

    static bool is_zero(const BosonElement& a);
    static bool equal(const BosonElement& a, const BosonElement& b);
    static bool equal(const BosonPair& a, const BosonPair& b);
    static bool equal(const BosonTriple& a, const BosonTriple& b);

private:
    friend class CoinvariantModule;
    void add_term(BosonElement& out, const BKey& k, const cyc& cf) const;

    NicholsTruncation R_;
    std::shared_ptr<const FiniteGroup> G_;
};

/// Named pass/fail items from an identity suite.
struct CheckReport {
    std::vector<std::pair<std::string, bool>> items;

    void add(const std::string& name, bool ok) { items.emplace_back(name, ok); }
    bool all_ok() const;
    /// Names of the failed items, comma separated (empty when all pass).
    std::string failures() const;
};

/**
 * @brief Full Hopf-algebra identity suite on the r#g basis.
 *
 * Covers associativity, coassociativity, (co)units, both antipode
 * convolution identities, S o S^{-1}, the commutation rules between the
 * group and R parts, the projection identities of pi and vartheta, the
 * reconstruction of R's braided structure maps from the big algebra, the
 * antipode restriction formulas and the square S^2 = S_R^2 theta, and the
 * anti(co)multiplicativity of the braided antipode. Tuples are enumerated
 * with total R-degree within the truncation window.
 */
CheckReport hopf_suite(const Bosonization& A);

/// The projection-antipode exchange identity
/// vS(a piS^{-1}(b_2) b_1) = vS(b_2) (pi(S(b_1) b_3) . vS(a))
/// on all basis pairs within the degree window (v = vartheta).
CheckReport vartheta_identity_check(const Bosonization& A);

/**
 * @brief Right coinvariants K of the projection killing off-pivot letters.
 *
 * K(n) is solved per (multidegree, group degree) block as the joint kernel
 * of (id (x) proj_b) comult(n-b, b) for 1 <= b <= n. The flattened space
 * X = sum_n K(n) carries the structure making K a braided Hopf algebra over
 * the quotient bosonization: group action, adjoint action of the quotient,
 * quotient coaction, and the restricted product and coproduct of K itself.
 */
class CoinvariantModule {
public:
    const Bosonization& ambient() const { return *big_; }
    const Bosonization& target() const { return *target_; }
    int pivot() const { return pivot_; }
    int cutoff() const { return cutoff_; }

    int dim(int n) const;
    /// Inclusion K(n) -> ambient degree n (columns are the basis).
    const Mat& basis(int n) const { return kbasis_.at(n); }
    /// Algebra projection of ambient degree n onto the quotient.
    const Mat& proj(int n) const { return proj_.at(n); }
    /// Letter inclusion of the quotient degree n into the ambient.
    const Mat& incl(int n) const { return incl_.at(n); }

    int total_dim() const { return total_; }
    int offset(int n) const { return offset_.at(n); }
    /// Degree of flattened basis vector i (ambient grading).
    int zdeg(int i) const { return zdeg_.at(i); }
    /// Number of off-pivot letters in the multidegree of basis vector i.
    int mdeg(int i) const { return mdeg_.at(i); }
    int gdeg(int i) const { return gdeg_.at(i); }

    const Mat& h_action(int g) const { return hact_.at(g); }
    /// Adjoint action of quotient basis vector b in degree d on X.
    const Mat& r_action(int d, int b) const { return ract_.at(d).at(b); }
    /// Quotient coaction component X -> quotient(d) (x) X.
    const Mat& r_coaction(int d) const { return rcoact_.at(d); }

    /// K is an algebra and a coalgebra; maps on the flattened space.
    const Mat& mult() const { return mult_; }
    const Mat& comult() const { return comult_; }

    /// Flattened coordinates of an ambient-degree-n vector lying in K(n).
    Mat flatten(int n, const Mat& col) const;

private:
    friend CoinvariantModule coinvariants(const Bosonization&, const Bosonization&, int);
    CoinvariantModule() = default;

    Mat k_coords(int n, const Mat& cols) const;

    const Bosonization* big_ = nullptr;
    const Bosonization* target_ = nullptr;
    int pivot_ = -1;
    int cutoff_ = 0;
    int total_ = 0;
    std::vector<Mat> proj_, incl_, kbasis_;
    std::vector<int> offset_;
    std::vector<int> zdeg_, mdeg_, gdeg_;
    std::vector<Mat> hact_;
    std::vector<std::vector<Mat>> ract_;
    std::vector<Mat> rcoact_;
    Mat mult_, comult_;
};

/**
 * @brief Coinvariants of `big` with respect to the projection onto `target`.
 *
 * `pivot` names the letter component of big's base module that survives the
 * projection; target must be the bosonization of exactly those letters
 * (pivot -1 selects no letters, so target must be trivial). The target
 * truncation must be complete within the cutoff and the coinvariants must
 * close under the adjoint action inside the window; otherwise
 * not_defined_at_cutoff is thrown. A projection that does not descend to
 * the quotient basis throws invalid_projection.
 */
CoinvariantModule coinvariants(const Bosonization& big, const Bosonization& target, int pivot);

}  // namespace ydn
