#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "testutil.hpp"
#include "ydn/bosonization.hpp"
#include "ydn/errors.hpp"
#include "ydn/nichols.hpp"
#include "ydn/omega.hpp"
#include "ydn/relative.hpp"
#include "ydn/ydmodule.hpp"

using namespace ydn;
using linalg::identity;
using linalg::is_zero_mat;
using linalg::kron;
using linalg::same_col_span;
using linalg::zero;

namespace {

Mat diag2(int a11, int a12, int a21, int a22) {
    Mat q = zero(2, 2);
    q(0, 0) = cyc(a11);
    q(0, 1) = cyc(a12);
    q(1, 0) = cyc(a21);
    q(1, 1) = cyc(a22);
    return q;
}

DiagonalData e0_data() { return make_diagonal(diag2(-1, 1, 1, -1)); }
DiagonalData e1_data() { return make_diagonal(diag2(-1, 1, -1, -1)); }

struct Desk {
    DiagonalData d;
    Bosonization big, tgt, tgtdual;
    CoinvariantModule K;

    Desk(const DiagonalData& dd, int cutoff)
        : d(dd),
          big(NicholsTruncation(yd_direct_sum(diagonal_tuple(d)), cutoff), d.G),
          tgt(NicholsTruncation(diagonal_module(d, 1), cutoff), d.G),
          tgtdual(NicholsTruncation(yd_dual(diagonal_module(d, 1)), cutoff), d.G),
          K(coinvariants(big, tgt, 1)) {}
};

/// Unit columns of the flattened coinvariants with ambient degree one and
/// one off-pivot letter; these seed the adjoint orbit.
Mat letter_seed(const CoinvariantModule& K) {
    Mat cols = zero(K.total_dim(), 0);
    for (int i = 0; i < K.total_dim(); ++i)
        if (K.zdeg(i) == 1 && K.mdeg(i) == 1) {
            cols.conservativeResize(K.total_dim(), cols.cols() + 1);
            cols.col(cols.cols() - 1) = zero(K.total_dim(), 1);
            cols(i, cols.cols() - 1) = cyc(1);
        }
    return cols;
}

bool mat_eq(const Mat& a, const Mat& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && is_zero_mat(Mat(a - b));
}

}  // namespace

TEST_CASE("coinvariant modules validate over the quotient") {
    Desk e0(e0_data(), 3);
    Desk e1(e1_data(), 4);
    for (const Desk* dk : {&e0, &e1}) {
        RelativeYDModule X = rel_from_coinvariants(dk->K);
        CheckReport rep = validate_relative(X);
        INFO(rep.failures());
        CHECK(rep.all_ok());

        RelativeYDModule T = rel_trivial(dk->tgt);
        CHECK(validate_relative(T).all_ok());
        CHECK(validate_relative(rel_tensor(X, T)).all_ok());
        CHECK(validate_relative(rel_tensor(X, X)).all_ok());
    }
}

TEST_CASE("adjoint orbit of the off-pivot letters") {
    Desk e0(e0_data(), 3);
    RelativeYDModule X0 = rel_from_coinvariants(e0.K);
    RelSubmodule W0 = rel_submodule(X0, adjoint_orbit(X0, letter_seed(e0.K)));
    CHECK(W0.module.dim() == 1);
    CHECK(W0.module.zdeg == std::vector<int>{1});

    Desk e1(e1_data(), 4);
    RelativeYDModule X1 = rel_from_coinvariants(e1.K);
    RelSubmodule W1 = rel_submodule(X1, adjoint_orbit(X1, letter_seed(e1.K)));
    CHECK(W1.module.dim() == 2);
    CHECK(W1.module.zdeg == std::vector<int>{1, 2});
    CHECK(rel_is_irreducible(W1.module));

    for (const RelativeYDModule* W : {&W0.module, &W1.module}) {
        CheckReport rep = verify_degree_filtrations(*W);
        INFO(rep.failures());
        CHECK(rep.all_ok());
    }
}

TEST_CASE("transport object checks on the desk examples") {
    Desk e0(e0_data(), 3);
    Desk e1(e1_data(), 4);
    for (const Desk* dk : {&e0, &e1}) {
        OmegaContext ctx = make_omega_context(dk->tgt, dk->tgtdual);
        RelativeYDModule X = rel_from_coinvariants(dk->K);
        CheckReport rep = omega_object_checks(ctx, X);
        INFO(rep.failures());
        CHECK(rep.all_ok());
    }
}

TEST_CASE("double application gives an isomorphic module, not the same matrices") {
    Desk e1(e1_data(), 4);
    OmegaContext ctx = make_omega_context(e1.tgt, e1.tgtdual);
    RelativeYDModule X = rel_from_coinvariants(e1.K);
    RelativeYDModule Y = omega_object(ctx, X);
    RelativeYDModule Z = omega_object(reverse_omega_context(ctx), Y);
    CHECK(Z.zdeg == X.zdeg);
    CHECK(validate_relative(Z).all_ok());
    bool same = true;
    for (int d = 0; d <= X.depth(); ++d)
        for (size_t b = 0; b < X.act[(size_t)d].size(); ++b)
            same = same && mat_eq(Z.act[(size_t)d][b], X.act[(size_t)d][b]);
    CHECK(!same);
    // The identification is the diagonal sign on the basis vector whose
    // group degree pairs nontrivially with the pivot letter.
    Mat U = identity(X.dim());
    U(2, 2) = cyc(-1);
    for (int d = 1; d <= X.depth(); ++d) {
        for (size_t b = 0; b < X.act[(size_t)d].size(); ++b)
            CHECK(mat_eq(Mat(U * X.act[(size_t)d][b] * U),
                         Mat(Z.act[(size_t)d][b])));
        const int k = e1.tgt.truncation().dim(d);
        CHECK(mat_eq(Mat(kron(identity(k), U) * X.coact[(size_t)d] * U),
                     Z.coact[(size_t)d]));
    }
}

TEST_CASE("transport is the identity on morphisms") {
    Desk e1(e1_data(), 4);
    OmegaContext ctx = make_omega_context(e1.tgt, e1.tgtdual);
    RelativeYDModule X = rel_from_coinvariants(e1.K);
    RelSubmodule W = rel_submodule(X, adjoint_orbit(X, letter_seed(e1.K)));
    RelativeYDModule YX = omega_object(ctx, X);
    RelativeYDModule YW = omega_object(ctx, W.module);
    const Mat& J = W.inclusion;
    for (int g = 0; g < ctx.A->group().order(); ++g)
        CHECK(mat_eq(Mat(YX.base.action[(size_t)g] * J),
                     Mat(J * YW.base.action[(size_t)g])));
    for (int d = 1; d <= YX.depth(); ++d) {
        for (size_t b = 0; b < YX.act[(size_t)d].size(); ++b)
            CHECK(mat_eq(Mat(YX.act[(size_t)d][b] * J), Mat(J * YW.act[(size_t)d][b])));
        const int k = ctx.Adual->truncation().dim(d);
        CHECK(mat_eq(Mat(YX.coact[(size_t)d] * J),
                     Mat(kron(identity(k), J) * YW.coact[(size_t)d])));
    }
}

TEST_CASE("comparison map is unitriangular and exactly invertible") {
    Desk e1(e1_data(), 4);
    OmegaContext ctx = make_omega_context(e1.tgt, e1.tgtdual);
    RelativeYDModule X = rel_from_coinvariants(e1.K);
    Mat om = omega_mu(ctx, X, X);
    for (int i = 0; i < om.rows(); ++i) CHECK(om(i, i) == cyc(1));
    Mat inv = linalg::inverse(om);
    CHECK(mat_eq(Mat(inv * om), identity((int)om.rows())));
    // Strictly triangular in the coaction filtration of the right leg.
    const int n = X.dim();
    for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!om(i2 * n + j2, i * n + j).is_zero() && j2 != j)
                        CHECK(e1.K.zdeg(j2) < e1.K.zdeg(j));
}

TEST_CASE("functoriality suite across the pair") {
    Desk e0(e0_data(), 3);
    Desk e1(e1_data(), 4);
    for (const Desk* dk : {&e0, &e1}) {
        OmegaContext ctx = make_omega_context(dk->tgt, dk->tgtdual);
        RelativeYDModule X = rel_from_coinvariants(dk->K);
        RelSubmodule W = rel_submodule(X, adjoint_orbit(X, letter_seed(dk->K)));
        RelativeYDModule T = rel_trivial(dk->tgt);
        std::vector<const RelativeYDModule*> samples{&X, &W.module, &T};
        std::vector<RelMorphism> morphs{{&W.module, &X, W.inclusion}};
        CheckReport rep = verify_braided_monoidal(ctx, samples, morphs);
        INFO(rep.failures());
        CHECK(rep.all_ok());
    }
}

TEST_CASE("coinvariants form a braided bialgebra and transport preserves it") {
    Desk e0(e0_data(), 3);
    Desk e1(e1_data(), 4);
    for (const Desk* dk : {&e0, &e1}) {
        OmegaContext ctx = make_omega_context(dk->tgt, dk->tgtdual);
        BraidedBialgebra B = bialgebra_from_coinvariants(dk->K);
        CheckReport rep = braided_bialgebra_suite(B);
        INFO(rep.failures());
        CHECK(rep.all_ok());

        BraidedBialgebra TB = transport_bialgebra(ctx, B);
        rep = braided_bialgebra_suite(TB);
        INFO(rep.failures());
        CHECK(rep.all_ok());

        // Degree-one part of the transport is primitive.
        const int T = TB.carrier.dim();
        for (int j = 0; j < T; ++j) {
            if (dk->K.zdeg(j) != 1) continue;
            Mat want = zero(T * T, 1);
            want(TB.unit * T + j, 0) += cyc(1);
            want(j * T + TB.unit, 0) += cyc(1);
            CHECK(mat_eq(TB.comult.col(j), want));
        }
    }
}

TEST_CASE("transport rejects malformed input") {
    Desk e1(e1_data(), 4);
    OmegaContext ctx = make_omega_context(e1.tgt, e1.tgtdual);
    RelativeYDModule X = rel_from_coinvariants(e1.K);

    // Module over the wrong algebra.
    RelativeYDModule over_dual = rel_trivial(e1.tgtdual);
    CHECK_THROWS_AS(omega_object(ctx, over_dual), input_error);
    CHECK_THROWS_AS(omega_mu(ctx, X, over_dual), input_error);

    // Corrupted structure is caught by validation of the image.
    RelativeYDModule bad = X;
    bad.act[1][0](0, 3) += cyc(1);
    CHECK_THROWS_AS(omega_object(ctx, bad), omega_inconsistent);

    // A singular gram matrix is rejected before any solve.
    OmegaContext broken = ctx;
    broken.gram[1].setZero();
    CHECK_THROWS_AS(omega_object(broken, X), pairing_degenerate);

    // Incomplete truncations cannot anchor the pairing.
    Bosonization open1(NicholsTruncation(yd_direct_sum(diagonal_tuple(e1.d)), 4), e1.d.G);
    Bosonization open2(
        NicholsTruncation(yd_dual(yd_direct_sum(diagonal_tuple(e1.d))), 4), e1.d.G);
    CHECK_THROWS_AS(make_omega_context(open1, open2), not_defined_at_cutoff);

    // A partner over a different group (and different dimensions).
    DiagonalData cube = make_diagonal([] {
        Mat q = zero(1, 1);
        q(0, 0) = cyc::root(3, 1);
        return q;
    }());
    Bosonization three(NicholsTruncation(diagonal_module(cube, 0), 4), cube.G);
    Bosonization threedual(NicholsTruncation(yd_dual(diagonal_module(cube, 0)), 4), cube.G);
    CHECK_THROWS_AS(make_omega_context(e1.tgt, threedual), input_error);
    CHECK(make_omega_context(three, threedual).gram.size() == 3);

    // A bialgebra that is not one fails the transported suite.
    BraidedBialgebra junk = bialgebra_from_coinvariants(e1.K);
    junk.mult(0, junk.carrier.dim() + 1) += cyc(1);
    CHECK_THROWS_AS(transport_bialgebra(ctx, junk), transport_inconsistent);
}
