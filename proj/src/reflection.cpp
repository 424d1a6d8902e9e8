#include "ydn/reflection.hpp"

#include <map>
#include <queue>
#include <string>
#include <utility>

#include "ydn/errors.hpp"
#include "ydn/nichols.hpp"

namespace ydn {

namespace {

/// Flattened unit columns of the degree-one coinvariants whose ambient
/// support lies in tuple entry `index`.
Mat entry_seed(const CoinvariantModule& K, const YDModule& ambient_base, int index) {
    const Mat& B1 = K.basis(1);
    Mat seed = linalg::zero(K.total_dim(), 0);
    for (int c = 0; c < B1.cols(); ++c) {
        int tag = -1;
        for (int p = 0; p < B1.rows(); ++p) {
            if (B1(p, c).is_zero()) continue;
            const int t = ambient_base.component[(size_t)p];
            if (tag == -1) tag = t;
            if (tag != t) throw input_error("degree-one coinvariant mixes tuple entries");
        }
        if (tag != index) continue;
        seed.conservativeResize(seed.rows(), seed.cols() + 1);
        seed.col(seed.cols() - 1) = linalg::zero(K.total_dim(), 1);
        seed(K.offset(1) + c, seed.cols() - 1) = cyc(1);
    }
    return seed;
}

/// Graded dimensions of a truncation whose letters carry positive weights;
/// the symmetrizers are block diagonal across the total weight.
std::vector<int> weighted_dims(const NicholsTruncation& T, const std::vector<int>& wt,
                               int zmax) {
    std::vector<int> out((size_t)zmax + 1, 0);
    out[0] = 1;
    const int k = (int)wt.size();
    long words = 1;
    for (int n = 1; n <= T.cutoff(); ++n) {
        if (T.dim(n) == 0) break;
        words *= k;
        if (words > 200000) throw input_error("orbit algebra too large to grade by weight");
        const Mat& S = T.symmetrizer(n);
        std::map<int, std::vector<int>> buckets;
        for (long idx = 0; idx < words; ++idx) {
            int w = 0;
            for (long rest = idx, t = 0; t < n; ++t, rest /= k) w += wt[(size_t)(rest % k)];
            if (w <= zmax) buckets[w].push_back((int)idx);
        }
        for (const auto& [w, rows] : buckets) {
            Mat block = linalg::zero((int)rows.size(), (int)rows.size());
            for (size_t a = 0; a < rows.size(); ++a)
                for (size_t b = 0; b < rows.size(); ++b)
                    block((int)a, (int)b) = S(rows[a], rows[b]);
            out[(size_t)w] += linalg::rank(block);
        }
    }
    return out;
}

/// The graded component of the orbit at the given ambient degree, as a
/// module over the group part alone.
YDModule rung_module(const RelativeYDModule& W, int z) {
    return yd_submodule(W.base, zdeg_component(W, z)).module;
}

bool tuples_isomorphic(const YDTuple& A, const YDTuple& B) {
    if (A.rank() != B.rank()) return false;
    for (int j = 0; j < A.rank(); ++j)
        if (!yd_find_isomorphism(A.entries[(size_t)j], B.entries[(size_t)j])) return false;
    return true;
}

}  // namespace

void validate_tuple(const YDTuple& M) {
    if (M.entries.empty()) throw input_error("a tuple needs at least one entry");
    const FiniteGroup* G = M.entries.front().G.get();
    for (const YDModule& E : M.entries) {
        if (E.G.get() != G) throw input_error("tuple entries live over different groups");
        yd_validate(E);
        if (!yd_is_irreducible(E)) throw input_error("tuple entries must be irreducible");
    }
}

AdjointLadder adjoint_ladder(const YDTuple& M, int pivot, int cutoff) {
    validate_tuple(M);
    if (pivot < 0 || pivot >= M.rank()) throw input_error("pivot out of range");
    if (cutoff < 2) throw input_error("the adjoint ladder needs a window of at least two");

    AdjointLadder L;
    L.pivot = pivot;
    L.cutoff = cutoff;
    const YDModule V = yd_direct_sum(M.entries);
    L.ambient = std::make_shared<Bosonization>(NicholsTruncation(V, cutoff), M.entries[0].G);
    L.quotient = std::make_shared<Bosonization>(
        NicholsTruncation(M.entries[(size_t)pivot], cutoff), M.entries[0].G);
    L.coinv =
        std::make_shared<CoinvariantModule>(coinvariants(*L.ambient, *L.quotient, pivot));
    L.carrier = rel_from_coinvariants(*L.coinv);
    const CoinvariantModule& K = *L.coinv;
    const int kdeg1 = L.quotient->truncation().dim(1);

    for (int j = 0; j < M.rank(); ++j) {
        if (j == pivot) continue;
        LadderEntry ent;
        ent.index = j;
        Mat rung = entry_seed(K, V, j);
        Mat span = rung;
        int n = 0;
        while (rung.cols() > 0) {
            ent.rung_dims.push_back((int)rung.cols());
            ent.exponent = n;
            if (n + 1 >= cutoff)
                throw not_defined_at_cutoff("adjoint ladder of entry " + std::to_string(j) +
                                            " still nonzero in degree " + std::to_string(n + 1));
            Mat next = linalg::zero(K.total_dim(), 0);
            for (int b = 0; b < kdeg1; ++b) {
                Mat img = K.r_action(1, b) * rung;
                Mat joined = linalg::zero(K.total_dim(), next.cols() + img.cols());
                joined.leftCols(next.cols()) = next;
                joined.rightCols(img.cols()) = img;
                next = joined;
            }
            rung = linalg::col_space_basis(next);
            if (rung.cols() > 0) {
                Mat joined = linalg::zero(K.total_dim(), span.cols() + rung.cols());
                joined.leftCols(span.cols()) = span;
                joined.rightCols(rung.cols()) = rung;
                span = joined;
            }
            ++n;
        }
        ent.orbit = rel_submodule(L.carrier, span);
        L.entries.push_back(std::move(ent));
    }
    return L;
}

Mat ladder_witness(const AdjointLadder& L, int index, int n) {
    for (const LadderEntry& e : L.entries) {
        if (e.index != index) continue;
        const CoinvariantModule& K = *L.coinv;
        const int z = n + 1;
        if (z > K.cutoff()) throw input_error("witness degree exceeds the window");
        Mat cols = linalg::zero(e.orbit.inclusion.rows(), 0);
        for (int c = 0; c < e.orbit.module.dim(); ++c)
            if (e.orbit.module.zdeg[(size_t)c] == z) {
                cols.conservativeResize(cols.rows(), cols.cols() + 1);
                cols.col(cols.cols() - 1) = e.orbit.inclusion.col(c);
            }
        return Mat(K.basis(z) * cols.middleRows(K.offset(z), K.dim(z)));
    }
    throw input_error("the pivot entry has no ladder");
}

ReflectionDatum reflect(const YDTuple& M, int pivot, int cutoff) {
    ReflectionDatum R;
    R.source = M;
    R.pivot = pivot;
    R.cutoff = cutoff;
    R.ladder = adjoint_ladder(M, pivot, cutoff);
    R.exponents.assign((size_t)M.rank(), 0);
    R.cartan_row.assign((size_t)M.rank(), 0);
    R.cartan_row[(size_t)pivot] = 2;
    R.result = M;
    R.result.entries[(size_t)pivot] = yd_dual(M.entries[(size_t)pivot]);
    for (const LadderEntry& e : R.ladder.entries) {
        R.exponents[(size_t)e.index] = e.exponent;
        R.cartan_row[(size_t)e.index] = -e.exponent;
        R.result.entries[(size_t)e.index] = rung_module(e.orbit.module, e.exponent + 1);
    }
    return R;
}

CheckReport verify_reflection_theorems(const YDTuple& M, int pivot, int cutoff) {
    CheckReport rep;
    const ReflectionDatum R = reflect(M, pivot, cutoff);
    const CoinvariantModule& K = *R.ladder.coinv;

    bool ok = true;
    for (const YDModule& E : R.result.entries) ok = ok && yd_is_irreducible(E);
    rep.add("reflected entries irreducible", ok);

    // The coinvariants are the truncated algebra generated by the orbit,
    // with the braiding the orbit carries over the pivot bosonization.
    Mat wspan = linalg::zero(K.total_dim(), 0);
    for (const LadderEntry& e : R.ladder.entries) {
        Mat joined = linalg::zero(K.total_dim(), wspan.cols() + e.orbit.inclusion.cols());
        joined.leftCols(wspan.cols()) = wspan;
        joined.rightCols(e.orbit.inclusion.cols()) = e.orbit.inclusion;
        wspan = joined;
    }
    ok = true;
    if (wspan.cols() == 0) {
        for (int z = 0; z <= cutoff; ++z) ok = ok && K.dim(z) == (z == 0 ? 1 : 0);
    } else {
        const RelSubmodule W = rel_submodule(R.ladder.carrier, wspan);
        BraidedSpace bs;
        bs.dim = W.module.dim();
        bs.braid = rel_braiding(W.module, W.module);
        const NicholsTruncation BW(bs, cutoff);
        const std::vector<int> wdims = weighted_dims(BW, W.module.zdeg, cutoff);
        for (int z = 0; z <= cutoff; ++z) ok = ok && K.dim(z) == wdims[(size_t)z];
    }
    rep.add("coinvariants match the orbit algebra", ok);

    const NicholsTruncation TR(yd_direct_sum(R.result.entries), cutoff);
    const NicholsTruncation TD(R.result.entries[(size_t)pivot], cutoff);
    ok = true;
    for (int d = 0; d <= cutoff; ++d) {
        int want = 0;
        for (int a = 0; a <= d; ++a) want += K.dim(a) * TD.dim(d - a);
        ok = ok && TR.dim(d) == want;
    }
    rep.add("reflected dimensions factor through the coinvariants", ok);

    const ReflectionDatum R2 = reflect(R.result, pivot, cutoff);
    ok = true;
    for (const LadderEntry& e : R2.ladder.entries) {
        const int m = R.exponents[(size_t)e.index];
        ok = ok && e.exponent == m;
        if (!ok) break;
        const YDModule back = rung_module(e.orbit.module, m + 1);
        ok = ok && yd_find_isomorphism(M.entries[(size_t)e.index], back).has_value();
    }
    rep.add("entries recovered by the dual adjoint ladder", ok);

    ok = tuples_isomorphic(R2.result, M) && R2.cartan_row == R.cartan_row &&
         R2.exponents == R.exponents;
    rep.add("double reflection returns the source", ok);

    ok = true;
    for (const LadderEntry& e : R.ladder.entries) {
        CheckReport prof = verify_degree_filtrations(e.orbit.module);
        ok = ok && prof.all_ok();
    }
    rep.add("orbit filtration profile", ok);
    return rep;
}

WeylGroupoidGraph weyl_groupoid(const YDTuple& M, int cutoff, int max_vertices) {
    validate_tuple(M);
    if (max_vertices < 1) throw input_error("the vertex cap must be positive");
    WeylGroupoidGraph G;
    G.cutoff = cutoff;
    G.vertices.push_back(M);
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        const YDTuple src = G.vertices[(size_t)v];
        for (int i = 0; i < src.rank(); ++i) {
            ReflectionDatum R;
            try {
                R = reflect(src, i, cutoff);
            } catch (const not_defined_at_cutoff&) {
                G.open.emplace_back(v, i);
                continue;
            }
            int to = -1;
            for (size_t t = 0; t < G.vertices.size() && to < 0; ++t)
                if (tuples_isomorphic(R.result, G.vertices[t])) to = (int)t;
            if (to < 0) {
                if ((int)G.vertices.size() >= max_vertices) {
                    G.unexplored.emplace_back(v, i);
                    continue;
                }
                to = (int)G.vertices.size();
                G.vertices.push_back(R.result);
                todo.push(to);
            }
            WeylEdge ed;
            ed.from = v;
            ed.pivot = i;
            ed.to = to;
            ed.cartan_row = R.cartan_row;
            G.edges.push_back(std::move(ed));
        }
    }
    return G;
}

}  // namespace ydn
