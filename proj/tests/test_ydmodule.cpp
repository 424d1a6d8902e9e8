#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "testutil.hpp"
#include "ydn/errors.hpp"
#include "ydn/linalg.hpp"
#include "ydn/ydmodule.hpp"

using namespace ydn;
using linalg::identity;
using linalg::is_zero_mat;
using linalg::kron;
using linalg::zero;

namespace {

Mat e1_braiding_matrix() {
    Mat q = zero(2, 2);
    q(0, 0) = cyc(-1);
    q(0, 1) = cyc(1);
    q(1, 0) = cyc(-1);
    q(1, 1) = cyc(-1);
    return q;
}

// Smallest stable graded subspace containing the given columns: closure under
// the action and under the projections onto all homogeneous components.
int spin_dim(const YDModule& M, const Mat& seed) {
    std::vector<int> degrees = M.degree;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    Mat span = linalg::col_space_basis(seed);
    for (;;) {
        Mat grown = zero(M.dim(), span.cols() * (M.G->order() + 1 + (int)degrees.size()));
        int c = 0;
        for (int j = 0; j < span.cols(); ++j) grown.col(c++) = span.col(j);
        for (int g = 0; g < M.G->order(); ++g) {
            Mat img = M.action[g] * span;
            for (int j = 0; j < img.cols(); ++j) grown.col(c++) = img.col(j);
        }
        for (int x : degrees)
            for (int j = 0; j < span.cols(); ++j) {
                Mat proj = span.col(j);
                for (int i = 0; i < M.dim(); ++i)
                    if (M.degree[i] != x) proj(i, 0) = cyc(0);
                grown.col(c++) = proj.col(0);
            }
        Mat next = linalg::col_space_basis(grown.leftCols(c));
        if (next.cols() == span.cols()) return (int)span.cols();
        span = next;
    }
}

}  // namespace

TEST_CASE("diagonal datum modules validate and braid by the matrix entries") {
    DiagonalData d = make_diagonal(e1_braiding_matrix());
    std::vector<YDModule> tup = diagonal_tuple(d);
    REQUIRE(tup.size() == 2);
    for (const auto& m : tup) {
        yd_validate(m);
        CHECK(m.dim() == 1);
    }
    YDModule V = yd_direct_sum(tup);
    yd_validate(V);
    CHECK(V.component == std::vector<int>{0, 1});
    Mat c = yd_braiding(V, V);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(c(j * 2 + i, i * 2 + j) == d.q(i, j));
        }
    CHECK(is_zero_mat(yd_braiding_inv(V, V) * c - identity(4)));
    CHECK(is_zero_mat(c * yd_braiding_inv(V, V) - identity(4)));
    // theta multiplies x_j by q_jj^{-1}; here q_jj = -1
    CHECK(is_zero_mat(yd_theta(V) + identity(2)));
    CHECK(is_zero_mat(yd_theta(V) * yd_theta_inv(V) - identity(2)));
}

TEST_CASE("order-2 diagonal duals coincide with the modules themselves") {
    Mat q = zero(2, 2);
    q(0, 0) = cyc(-1);
    q(0, 1) = cyc(1);
    q(1, 0) = cyc(1);
    q(1, 1) = cyc(-1);
    DiagonalData d = make_diagonal(q);
    for (int j = 0; j < 2; ++j) {
        YDModule M = diagonal_module(d, j);
        YDModule D = yd_dual(M);
        CHECK(D.degree == M.degree);
        for (int g = 0; g < d.G->order(); ++g) CHECK(is_zero_mat(D.action[g] - M.action[g]));
    }
}

TEST_CASE("conjugacy class module over S3") {
    auto G = testutil::s3_group();
    YDModule M = class_module(G, 1, testutil::s3_sign());
    yd_validate(M);
    CHECK(M.dim() == 3);
    CHECK(M.degree == std::vector<int>{1, 2, 5});

    SUBCASE("braiding satisfies the braid relation") {
        Mat c = yd_braiding(M, M);
        Mat c12 = kron(c, identity(3));
        Mat c23 = kron(identity(3), c);
        CHECK(is_zero_mat(c12 * c23 * c12 - c23 * c12 * c23));
        CHECK(is_zero_mat(yd_braiding_inv(M, M) * c - identity(9)));
    }

    SUBCASE("theta commutes with the action and preserves degrees") {
        Mat T = yd_theta(M);
        for (int g = 0; g < 6; ++g) CHECK(is_zero_mat(T * M.action[g] - M.action[g] * T));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!T(i, j).is_zero()) CHECK(M.degree[i] == M.degree[j]);
        CHECK(is_zero_mat(yd_theta_inv(M) * T - identity(3)));
    }

    SUBCASE("dual of the dual is the module itself") {
        YDModule D = yd_dual(M);
        yd_validate(D);
        YDModule DD = yd_dual(D);
        CHECK(DD.degree == M.degree);
        for (int g = 0; g < 6; ++g) CHECK(is_zero_mat(DD.action[g] - M.action[g]));
    }

    SUBCASE("tensor square validates and its braiding fits both hexagons") {
        YDModule MM = yd_tensor(M, M);
        yd_validate(MM);
        Mat lhs = yd_braiding(MM, M);
        Mat rhs = kron(yd_braiding(M, M), identity(3)) * kron(identity(3), yd_braiding(M, M));
        CHECK(is_zero_mat(lhs - rhs));
        Mat lhs2 = yd_braiding(M, MM);
        Mat rhs2 = kron(identity(3), yd_braiding(M, M)) * kron(yd_braiding(M, M), identity(3));
        CHECK(is_zero_mat(lhs2 - rhs2));
    }
}

TEST_CASE("validation rejects broken structures") {
    auto G = testutil::s3_group();
    YDModule M = class_module(G, 1, testutil::s3_sign());

    SUBCASE("identity must act trivially") {
        M.action[0](0, 0) = cyc(2);
        CHECK_THROWS_AS(yd_validate(M), not_a_yd_module);
    }
    SUBCASE("homomorphism property") {
        M.action[3] = identity(3);
        CHECK_THROWS_AS(yd_validate(M), not_a_yd_module);
    }
    SUBCASE("grading compatibility") {
        std::swap(M.degree[0], M.degree[1]);
        CHECK_THROWS_AS(yd_validate(M), not_a_yd_module);
    }
    SUBCASE("character input must restrict to a centralizer character") {
        std::vector<cyc> bad(6, cyc(1));
        bad[1] = cyc(2);  // 2 is not a root of unity, not multiplicative on {0,1}
        CHECK_THROWS_AS(class_module(G, 1, bad), input_error);
    }
}

TEST_CASE("irreducibility via the endomorphism algebra, with a spinning oracle") {
    auto G = testutil::s3_group();
    YDModule Msgn = class_module(G, 1, testutil::s3_sign());
    YDModule Mtriv = class_module(G, 1, std::vector<cyc>(6, cyc(1)));

    CHECK(yd_is_irreducible(Msgn));
    CHECK(yd_is_irreducible(Mtriv));
    CHECK(yd_hom_space(Msgn, Mtriv).cols() == 0);

    // 3-cycle class with a primitive character of the cyclic centralizer
    std::vector<cyc> chi(6, cyc(0));
    chi[0] = cyc(1);
    chi[3] = cyc::root(3, 1);
    chi[4] = cyc::root(3, 2);
    YDModule Mrot = class_module(G, 3, chi);
    yd_validate(Mrot);
    CHECK(Mrot.dim() == 2);
    CHECK(yd_is_irreducible(Mrot));

    YDModule MM = yd_direct_sum({Msgn, Msgn});
    YDModule MT = yd_direct_sum({Msgn, Mtriv});
    CHECK(!yd_is_irreducible(MM));
    CHECK(yd_hom_space(MM, MM).cols() == 4);
    CHECK(!yd_is_irreducible(MT));
    CHECK(yd_hom_space(MT, MT).cols() == 2);

    // oracle: every vector of an irreducible module generates all of it,
    // while a summand embedding generates a proper subspace
    for (int j = 0; j < 3; ++j) CHECK(spin_dim(Msgn, identity(3).col(j)) == 3);
    for (int j = 0; j < 2; ++j) CHECK(spin_dim(Mrot, identity(2).col(j)) == 2);
    CHECK(spin_dim(MM, identity(6).col(0)) == 3);
}

TEST_CASE("isomorphism search returns an exact intertwiner") {
    auto G = testutil::s3_group();
    YDModule Msgn = class_module(G, 1, testutil::s3_sign());
    YDModule Mtriv = class_module(G, 1, std::vector<cyc>(6, cyc(1)));
    CHECK(!yd_find_isomorphism(Msgn, Mtriv).has_value());

    YDModule A = yd_direct_sum({Msgn, Msgn});
    // conjugate by a degree-preserving invertible map mixing the two copies
    Mat P = identity(6);
    P(0, 3) = cyc(1);
    P(1, 4) = cyc(3);
    P(2, 5) = cyc::rational(1, 2);
    Mat Pinv = linalg::inverse(P);
    YDModule B = A;
    B.component.clear();
    for (int g = 0; g < 6; ++g) B.action[g] = Pinv * A.action[g] * P;
    yd_validate(B);

    auto iso = yd_find_isomorphism(A, B);
    REQUIRE(iso.has_value());
    CHECK(linalg::rank(*iso) == 6);
    for (int g = 0; g < 6; ++g) CHECK(is_zero_mat(*iso * A.action[g] - B.action[g] * *iso));

    auto self = yd_find_isomorphism(Msgn, Msgn);
    REQUIRE(self.has_value());
    CHECK(linalg::rank(*self) == 3);
}

TEST_CASE("submodule extraction") {
    auto G = testutil::s3_group();
    YDModule Msgn = class_module(G, 1, testutil::s3_sign());
    YDModule A = yd_direct_sum({Msgn, Msgn});

    // the diagonal copy {(v, v)} is stable and graded
    Mat span = zero(6, 3);
    for (int j = 0; j < 3; ++j) {
        span(j, j) = cyc(1);
        span(j + 3, j) = cyc(1);
    }
    SubmoduleView sub = yd_submodule(A, span);
    CHECK(sub.module.dim() == 3);
    CHECK(linalg::same_col_span(sub.inclusion, span));
    auto iso = yd_find_isomorphism(sub.module, Msgn);
    CHECK(iso.has_value());

    // a single homogeneous vector is graded but not stable
    CHECK_THROWS_AS(yd_submodule(Msgn, identity(3).col(0)), not_a_yd_module);

    // a mixed-degree vector is not graded
    Mat skew = zero(3, 1);
    skew(0, 0) = cyc(1);
    skew(1, 0) = cyc(1);
    CHECK_THROWS_AS(yd_submodule(Msgn, skew), not_a_yd_module);
}
