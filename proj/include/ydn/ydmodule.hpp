#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ydn/group.hpp"
#include "ydn/linalg.hpp"

namespace ydn {

/**
 * @brief Yetter-Drinfeld module over the group algebra kG.
 *
 * A G-graded vector space with a G-action such that g . M_x <= M_{g x g^{-1}}.
 * Basis vectors carry a group degree; action[g] is a dim x dim matrix on
 * column vectors. The working field is Q(zeta_N) for N a common multiple of
 * exp(G) and the conductors of all matrix entries; with that convention
 * "irreducible" and "absolutely irreducible" coincide.
 *
 * `component` optionally tags each basis vector with a direct-summand index
 * (used to track multidegrees when the module is a tagged direct sum).
 */
struct YDModule {
    std::shared_ptr<const FiniteGroup> G;
    std::vector<int> degree;    // group degree per basis vector
    std::vector<Mat> action;    // one matrix per group element
    std::vector<int> component; // per-basis summand tag; empty when untagged

    int dim() const { return (int)degree.size(); }
    const Mat& act(int g) const { return action[g]; }
};

/// Structural validation; throws not_a_yd_module with the violated condition.
void yd_validate(const YDModule& M);

/// Tensor product with diagonal action and multiplied degrees. Tags are dropped.
YDModule yd_tensor(const YDModule& A, const YDModule& B);

/// Tagged direct sum; summand i of `parts` gets component tag i.
YDModule yd_direct_sum(const std::vector<YDModule>& parts);

/// Braiding c_{A,B}: A (x) B -> B (x) A, a (x) b -> (deg(a) . b) (x) a.
/// Pair index convention: (i, j) -> i * dim(second factor) + j.
Mat yd_braiding(const YDModule& A, const YDModule& B);

/// Inverse braiding as a map B (x) A -> A (x) B.
Mat yd_braiding_inv(const YDModule& A, const YDModule& B);

/// Dual module: degrees invert, action(g) = action(g^{-1})^T.
YDModule yd_dual(const YDModule& M);

/// theta(v) = deg(v)^{-1} . v, as a matrix; preserves degrees and commutes
/// with the action (the square of the antipode is trivial on a group algebra).
Mat yd_theta(const YDModule& M);
Mat yd_theta_inv(const YDModule& M);

/// Basis of degree-preserving intertwiners A -> B, one vectorized map per
/// column (column-major: entry (i,j) of the map sits at i + j*dim(B)).
Mat yd_hom_space(const YDModule& A, const YDModule& B);

/**
 * @brief Irreducibility test.
 *
 * Exact in characteristic 0 under the field convention above: M is
 * irreducible iff its YD endomorphism algebra is one-dimensional
 * (semisimplicity makes dim End >= 2 for any decomposable module).
 */
bool yd_is_irreducible(const YDModule& M);

/**
 * @brief Invertible intertwiner A -> B, or nullopt if none exists.
 *
 * Existence is decided exactly first: with A = sum S_i^{a_i}, B = sum S_i^{b_i},
 * dim Hom(A,B) = dim End(A) = dim End(B) forces sum (a_i - b_i)^2 = 0. Only
 * when that certificate passes is an invertible element of the hom space
 * searched for (deterministically; guaranteed to exist).
 */
std::optional<Mat> yd_find_isomorphism(const YDModule& A, const YDModule& B);

struct SubmoduleView {
    YDModule module;
    Mat inclusion;  // ambient_dim x sub_dim, columns are the homogeneous basis
};

/**
 * @brief Extract the YD structure on a subspace given by the column span.
 *
 * The span must be a graded stable subspace (it is re-based degreewise, so
 * the returned basis is homogeneous); otherwise not_a_yd_module is thrown.
 */
SubmoduleView yd_submodule(const YDModule& M, const Mat& span);

/**
 * @brief Module induced from a conjugacy class and a centralizer character.
 *
 * Basis vectors correspond to the class elements of `class_rep` (ascending
 * index order) and carry them as degrees; `rho` is a 1-dimensional character
 * of the centralizer of `class_rep`, given as a vector indexed by group
 * element (entries outside the centralizer are ignored). Coset
 * representatives are chosen deterministically (smallest conjugator).
 */
YDModule class_module(std::shared_ptr<const FiniteGroup> G, int class_rep, const std::vector<cyc>& rho);

/// The 1-dimensional module (g_j, chi_j) of a diagonal datum.
YDModule diagonal_module(const DiagonalData& d, int j);

/// All theta entries of a diagonal datum, in order.
std::vector<YDModule> diagonal_tuple(const DiagonalData& d);

}  // namespace ydn
