#pragma once

#include <memory>
#include <vector>

#include "ydn/relative.hpp"

namespace ydn {

/// Ordered tuple of irreducible modules over one group.
struct YDTuple {
    std::vector<YDModule> entries;

    int rank() const { return (int)entries.size(); }
};

/// Throws input_error unless all entries share the group and each one is a
/// valid irreducible module.
void validate_tuple(const YDTuple& M);

/**
 * @brief Orbit of one off-pivot entry under the adjoint ladder.
 *
 * `rung_dims[n]` is the dimension of the n-th adjoint power, living in
 * ambient degree n + 1; `exponent` is the largest n with a nonzero power
 * (the next power vanishes inside the window, which is what makes the
 * exponent a witnessed value). `orbit` is the sum of all powers as a
 * module over the pivot bosonization, with its inclusion into the
 * flattened coinvariants.
 */
struct LadderEntry {
    int index = 0;
    int exponent = 0;
    std::vector<int> rung_dims;
    RelSubmodule orbit;
};

/**
 * @brief Coinvariants of the pivot projection together with the adjoint
 * ladders of all off-pivot entries.
 *
 * The two bosonizations are owned here so that the carrier and the orbits
 * may refer to them; copying shares them.
 */
struct AdjointLadder {
    std::shared_ptr<const Bosonization> ambient;
    std::shared_ptr<const Bosonization> quotient;
    std::shared_ptr<const CoinvariantModule> coinv;
    RelativeYDModule carrier;
    int pivot = 0;
    int cutoff = 0;
    std::vector<LadderEntry> entries;  // off-pivot positions, ascending
};

/**
 * @brief Adjoint powers of every off-pivot entry inside the truncated
 * ambient algebra of the whole tuple.
 *
 * Requires cutoff >= 2. Throws not_defined_at_cutoff when a ladder is
 * still nonzero at the window boundary, so that every reported exponent
 * is certified by a vanishing next power.
 */
AdjointLadder adjoint_ladder(const YDTuple& M, int pivot, int cutoff);

/// Basis of the n-th adjoint power of entry `index`, as columns in the
/// ambient truncation degree n + 1.
Mat ladder_witness(const AdjointLadder& L, int index, int n);

/**
 * @brief One reflection of a tuple: the pivot entry is replaced by its
 * dual and every other entry by the top graded component of its adjoint
 * orbit.
 *
 * `exponents[j]` is the ladder exponent at the off-pivot positions and 0
 * at the pivot; `cartan_row[j] = -exponents[j]` off the pivot and 2 on it.
 */
struct ReflectionDatum {
    YDTuple source;
    YDTuple result;
    int pivot = 0;
    int cutoff = 0;
    std::vector<int> exponents;
    std::vector<int> cartan_row;
    AdjointLadder ladder;
};

ReflectionDatum reflect(const YDTuple& M, int pivot, int cutoff);

/**
 * @brief Desk-scale verification of the reflection theory on one tuple.
 *
 * Items, all exact within the cutoff window:
 *  - every reflected entry is irreducible;
 *  - the coinvariants have the graded dimensions of the truncated algebra
 *    generated by the orbit, graded by ambient degree;
 *  - the dimensions of the reflected algebra factor degreewise as
 *    coinvariants times the dual pivot algebra;
 *  - each source entry is recovered from the reflected tuple by the
 *    adjoint ladder of the dual pivot, up to isomorphism;
 *  - reflecting twice returns the source tuple entrywise with the same
 *    Cartan row;
 *  - each orbit has the filtration profile of an irreducible graded
 *    module.
 */
CheckReport verify_reflection_theorems(const YDTuple& M, int pivot, int cutoff);

/// Directed edge: reflecting `from` at `pivot` lands on vertex `to`.
struct WeylEdge {
    int from = 0;
    int pivot = 0;
    int to = 0;
    std::vector<int> cartan_row;
};

/**
 * @brief Closure of a tuple under all reflections that are defined within
 * the cutoff, up to entrywise isomorphism of vertices.
 *
 * `open` collects (vertex, pivot) pairs whose ladder did not terminate
 * inside the window; `unexplored` collects pairs skipped because the
 * vertex cap was reached. The graph is complete when both are empty.
 */
struct WeylGroupoidGraph {
    std::vector<YDTuple> vertices;
    std::vector<WeylEdge> edges;
    std::vector<std::pair<int, int>> open;
    std::vector<std::pair<int, int>> unexplored;
    int cutoff = 0;

    bool complete() const { return open.empty() && unexplored.empty(); }
};

WeylGroupoidGraph weyl_groupoid(const YDTuple& M, int cutoff, int max_vertices);

}  // namespace ydn
