#pragma once

#include <vector>

#include "ydn/bosonization.hpp"
#include "ydn/linalg.hpp"
#include "ydn/nichols.hpp"

namespace ydn {

/**
 * @brief Graded Hopf pairing between a truncation built on the dual module
 * and one built on the module itself.
 *
 * Degree 1 pairs dual bases, <xi_i, x_j> = delta_ij; higher degrees follow
 * from the product/comultiplication adjunction
 *   <xi eta, x> = sum <eta, x^(1)> <xi, x^(2)>   (xi a letter)
 * evaluated on words, then restricted to the quotient bases. `word_gram`
 * keeps the word-level matrices; their kernels coincide with the symmetrizer
 * kernels, which is what makes the restriction well defined.
 */
class GradedPairing {
public:
    int cutoff() const { return (int)gram_.size() - 1; }
    const Mat& gram(int n) const;
    const Mat& word_gram(int n) const;
    /// Exact inverse of gram(n); throws pairing_degenerate when singular.
    Mat gram_inverse(int n) const;

private:
    friend GradedPairing canonical_pairing(const NicholsTruncation&, const NicholsTruncation&);
    std::vector<Mat> gram_;
    std::vector<Mat> word_gram_;
};

/**
 * @brief The canonical pairing of `Bdual` against `B`.
 *
 * Both truncations must be module backed with the same number of letters;
 * the common cutoff is the smaller of the two. Throws input_error when the
 * symmetrizer kernels fail to annihilate the word pairing, i.e. when the two
 * truncations are not dual to each other.
 */
GradedPairing canonical_pairing(const NicholsTruncation& Bdual, const NicholsTruncation& B);

/**
 * @brief Companion pairing in the opposite order, B(M) against B(M*).
 *
 * Composing with the degreewise pivot map U_n = S^2 theta turns the
 * canonical pairing around: <x, xi>' = <xi, U x>, i.e. the degree-n matrix
 * is (gram(n) U_n)^T.
 */
std::vector<Mat> inverse_pairing(const GradedPairing& P, const NicholsTruncation& B);

/// Same with the degreewise gram matrices given directly.
std::vector<Mat> inverse_pairing(const std::vector<Mat>& gram, const NicholsTruncation& B);

/**
 * @brief Axiom suite for the canonical pairing and its companion.
 *
 * Builds the canonical pairing of `Bdual` against `B` and checks, degree by
 * degree within the common window: the unit and letter normalizations,
 * compatibility with the group action, support on inverse group degrees,
 * multiplicativity of products in either slot against the coproduct of the
 * other, the antipode exchange rule, and nondegeneracy on the quotient.
 * The axiom items are then repeated for the opposite-order pairing from
 * inverse_pairing, whose degree-one part is the pivot map instead of the
 * identity.
 */
CheckReport pairing_suite(const NicholsTruncation& Bdual, const NicholsTruncation& B);

}  // namespace ydn
