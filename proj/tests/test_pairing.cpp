#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "testutil.hpp"
#include "ydn/errors.hpp"
#include "ydn/nichols.hpp"
#include "ydn/pairing.hpp"
#include "ydn/ydmodule.hpp"

using namespace ydn;
using linalg::identity;
using linalg::is_zero_mat;
using linalg::kernel;
using linalg::rank;
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

YDModule e0_module() { return yd_direct_sum(diagonal_tuple(make_diagonal(diag2(-1, 1, 1, -1)))); }
YDModule e1_module() { return yd_direct_sum(diagonal_tuple(make_diagonal(diag2(-1, 1, -1, -1)))); }
YDModule s3_sign_module() { return class_module(testutil::s3_group(), 1, testutil::s3_sign()); }

}  // namespace

TEST_CASE("low-degree pairing values of the diagonal examples") {
    YDModule V0 = e0_module();
    NicholsTruncation B0(V0, 3), B0d(yd_dual(V0), 3);
    GradedPairing P0 = canonical_pairing(B0d, B0);
    CHECK(is_zero_mat(P0.gram(0) - identity(1)));
    CHECK(is_zero_mat(P0.gram(1) - identity(2)));
    REQUIRE(P0.gram(2).rows() == 1);
    CHECK(P0.gram(2)(0, 0) == cyc(1));

    YDModule V1 = e1_module();
    NicholsTruncation B1(V1, 4), B1d(yd_dual(V1), 4);
    GradedPairing P1 = canonical_pairing(B1d, B1);
    Mat expected = diag2(1, 1, 1, -1);
    CHECK(is_zero_mat(P1.gram(2) - expected));
}

TEST_CASE("pairing axioms: action, degrees, antipode, products") {
    struct Case {
        YDModule V;
        int cutoff;
    };
    std::vector<Case> cases = {{e0_module(), 4}, {e1_module(), 4}, {s3_sign_module(), 4}};
    for (const auto& cs : cases) {
        NicholsTruncation B(cs.V, cs.cutoff), Bd(yd_dual(cs.V), cs.cutoff);
        GradedPairing P = canonical_pairing(Bd, B);
        const FiniteGroup& G = *cs.V.G;
        for (int n = 0; n <= cs.cutoff; ++n) {
            const Mat& g = P.gram(n);

            // <h . xi, x> = <xi, h^{-1} . x>
            for (int h = 0; h < G.order(); ++h)
                CHECK(is_zero_mat(Bd.h_action(h, n).transpose() * g -
                                  g * B.h_action(G.inv(h), n)));

            // only inverse degrees pair nontrivially
            for (int a = 0; a < g.rows(); ++a)
                for (int b = 0; b < g.cols(); ++b)
                    if (!g(a, b).is_zero())
                        CHECK(Bd.basis_gdeg(n, a) == G.inv(B.basis_gdeg(n, b)));

            // <S xi, x> = <xi, S x>
            CHECK(is_zero_mat(Bd.antipode(n).transpose() * g - g * B.antipode(n)));

            // nondegenerate on the quotient
            if (B.dim(n) > 0) CHECK(rank(P.gram_inverse(n)) == B.dim(n));
        }

        // <xi, x y> = sum <xi^(1), y> <xi^(2), x>
        for (int a = 1; a < cs.cutoff; ++a)
            for (int b = 1; a + b <= cs.cutoff; ++b) {
                Mat lhs = P.gram(a + b) * B.mult(a, b);
                Mat cd = Bd.comult(b, a);
                const int da = B.dim(a), db = B.dim(b);
                const int ea = Bd.dim(a), eb = Bd.dim(b);
                Mat rhs = zero((int)lhs.rows(), (int)lhs.cols());
                for (int c = 0; c < rhs.rows(); ++c)
                    for (int p = 0; p < da; ++p)
                        for (int q = 0; q < db; ++q) {
                            cyc acc(0);
                            for (int r = 0; r < eb; ++r)
                                for (int s = 0; s < ea; ++s)
                                    acc += cd(r * ea + s, c) * P.gram(b)(r, q) * P.gram(a)(s, p);
                            rhs(c, p * db + q) = acc;
                        }
                CAPTURE(a);
                CAPTURE(b);
                CHECK(is_zero_mat(lhs - rhs));
            }
    }
}

TEST_CASE("word pairing radical matches the symmetrizer kernel") {
    for (const YDModule& V : {e1_module(), s3_sign_module()}) {
        YDModule Vd = yd_dual(V);
        NicholsTruncation T(V, 4, AlgebraKind::tensor), Td(Vd, 4, AlgebraKind::tensor);
        NicholsTruncation B(V, 4);
        GradedPairing WP = canonical_pairing(Td, T);
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(n);
            CHECK(rank(WP.word_gram(n)) == B.dim(n));
            CHECK(linalg::same_col_span(kernel(WP.word_gram(n)), kernel(B.symmetrizer(n))));
        }
    }
}

TEST_CASE("mismatched modules are rejected") {
    NicholsTruncation B0(e0_module(), 3), B1(e1_module(), 3);
    CHECK_THROWS_AS(canonical_pairing(B0, B1), input_error);
}

TEST_CASE("companion pairing in the opposite order") {
    for (const YDModule& V : {e1_module(), s3_sign_module()}) {
        const int D = 4;
        NicholsTruncation B(V, D), Bd(yd_dual(V), D);
        GradedPairing P = canonical_pairing(Bd, B);
        std::vector<Mat> Q = inverse_pairing(P, B);
        const FiniteGroup& G = *V.G;

        // degree 1 is the pivot map itself
        CHECK(is_zero_mat(Q[1] - yd_theta(V).transpose()));

        for (int n = 0; n <= D; ++n) {
            // mirrored action and antipode axioms
            for (int h = 0; h < G.order(); ++h)
                CHECK(is_zero_mat(B.h_action(h, n).transpose() * Q[n] -
                                  Q[n] * Bd.h_action(G.inv(h), n)));
            CHECK(is_zero_mat(B.antipode(n).transpose() * Q[n] - Q[n] * Bd.antipode(n)));
            for (int a = 0; a < Q[n].rows(); ++a)
                for (int b = 0; b < Q[n].cols(); ++b)
                    if (!Q[n](a, b).is_zero())
                        CHECK(B.basis_gdeg(n, a) == G.inv(Bd.basis_gdeg(n, b)));
            if (B.dim(n) > 0) CHECK(rank(Q[n]) == B.dim(n));
        }
    }
}
