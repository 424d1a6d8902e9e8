#pragma once

#include <vector>

#include "ydn/bosonization.hpp"

namespace ydn {

/**
 * @brief A Yetter-Drinfeld module over a bosonization R#kG.
 *
 * The group part lives in `base` (degrees and action). The R-part of the
 * action is stored per degree and basis vector of R; act[0] = {identity}.
 * The coaction stores only its R-component: coact[d] maps X into
 * R(d) (x) X with row index r*dim+x, and coact[0] = identity. The full
 * A-coaction is recovered by tagging the X-leg's group degree onto the
 * R-leg. `zdeg` is an optional Z-grading (empty = ungraded) under which
 * act[d] raises degrees by d and coact[d] lowers them by d.
 *
 * The pointed-to bosonization must outlive the module and have a complete
 * truncation, so that all structure identities close globally.
 */
struct RelativeYDModule {
    const Bosonization* A = nullptr;
    YDModule base;
    std::vector<std::vector<Mat>> act;
    std::vector<Mat> coact;
    std::vector<int> zdeg;

    int dim() const { return base.dim(); }
    /// Largest R-degree with stored structure (the top degree of R).
    int depth() const { return (int)act.size() - 1; }
};

/// The coinvariants repackaged as a module over the quotient bosonization.
RelativeYDModule rel_from_coinvariants(const CoinvariantModule& K);

/// One-dimensional module with trivial action and coaction, graded by 0.
RelativeYDModule rel_trivial(const Bosonization& A);

/// Action of an arbitrary algebra element, term by term: (r#g)m = r(gm).
Mat rel_act_element(const RelativeYDModule& X, const BosonElement& a);

/**
 * @brief Structural validation of a relative module.
 *
 * Checks the group part, that the action respects products of R and the
 * smash commutation rule, comodule coassociativity and counit, group and
 * degree compatibility of all structure maps, and the Yetter-Drinfeld
 * condition delta(a m) = a_1 m_(-1) S(a_3) (x) a_2 m_(0) on generators
 * (group elements and degree-one elements of R; these generate A, and the
 * condition for a product follows from its factors).
 */
CheckReport validate_relative(const RelativeYDModule& X);

/// Tensor product with the diagonal action and codiagonal coaction.
RelativeYDModule rel_tensor(const RelativeYDModule& X, const RelativeYDModule& Y);

/// Braiding c(m (x) n) = m_(-1) n (x) m_(0) as a matrix X (x) Y -> Y (x) X,
/// pair index (i, j) -> i * dim(second factor) + j on either side.
Mat rel_braiding(const RelativeYDModule& X, const RelativeYDModule& Y);

struct RelSubmodule {
    RelativeYDModule module;
    Mat inclusion;  // ambient_dim x sub_dim, homogeneous columns
};

/**
 * @brief Structure induced on a stable subspace given by a column span.
 *
 * The span is re-based per (grading, group degree) pair, in ascending
 * order; it must be homogeneous and stable under the group, the action and
 * the coaction, otherwise input_error is thrown.
 */
RelSubmodule rel_submodule(const RelativeYDModule& X, const Mat& span);

/// Closure of the seed columns under all positive-degree action operators.
Mat adjoint_orbit(const RelativeYDModule& X, const Mat& seed);

/// Basis of the subspace killed by every coaction component of degree > n.
Mat rel_fdelta(const RelativeYDModule& X, int n);

/// Basis of the subspace killed by every action operator of degree > n.
Mat rel_fmu(const RelativeYDModule& X, int n);

/// Unit columns of the grading component z (requires a graded module).
Mat zdeg_component(const RelativeYDModule& X, int z);

/**
 * @brief Dimension of the space of endomorphisms commuting with the whole
 * structure (group action, R action, coaction contractions) and preserving
 * the group degree and the grading.
 *
 * In the semisimple setting a module is irreducible iff this is 1.
 */
int rel_end_dim(const RelativeYDModule& X);

bool rel_is_irreducible(const RelativeYDModule& X);

/**
 * @brief Filtration profile of an irreducible graded module.
 *
 * For an irreducible module with consecutive graded components n0..n1,
 * the coaction filtration in step n is the sum of the components up to
 * n0 + n, the action filtration is the sum of the components from n1 - n,
 * and the two extreme components are irreducible over the group part.
 */
CheckReport verify_degree_filtrations(const RelativeYDModule& X);

}  // namespace ydn
