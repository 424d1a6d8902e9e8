#pragma once

#include <vector>

#include "ydn/linalg.hpp"
#include "ydn/ydmodule.hpp"

namespace ydn {

/**
 * @brief Braided vector space: an invertible solution of the braid relation.
 *
 * `braid` acts on V (x) V with pair index (i,j) -> i*dim+j. `component`
 * optionally tags basis vectors with a summand index so that word
 * multidegrees can be tracked; the braiding must preserve tags (it does for
 * every braiding arising from a direct sum of modules).
 */
struct BraidedSpace {
    int dim = 0;
    Mat braid;
    std::vector<int> component;  // empty = a single unnamed summand
};

/// Forget the module structure, keeping braiding and summand tags.
BraidedSpace braided_of(const YDModule& M);

/// Throws input_error unless `braid` is invertible and satisfies the braid
/// relation on V^{(x)3}.
void validate_braiding(const Mat& braid, int dim);

/// The braiding applied at tensor positions (i, i+1), 1-based, of V^{(x)n}.
Mat braid_at(const Mat& braid, int dim, int n, int i);

/// Positive braiding of the first r tensor factors past the last s,
/// as a map V^{(x)r} (x) V^{(x)s} -> V^{(x)s} (x) V^{(x)r}.
Mat block_braiding(const Mat& braid, int dim, int r, int s);

/**
 * @brief Quantum symmetrizers of degrees 0..cutoff.
 *
 * Computed by the recursion S_n = (S_{n-1} (x) id) T_n with
 * T_n = 1 + c_{n-1} + c_{n-1} c_{n-2} + ... + c_{n-1} ... c_1,
 * which enumerates, through Matsumoto lifts of reduced words, every
 * permutation exactly once.
 */
std::vector<Mat> symmetrizers(const Mat& braid, int dim, int cutoff);

}  // namespace ydn
