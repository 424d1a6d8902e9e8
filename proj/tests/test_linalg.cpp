#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ydn/cyclotomic.hpp"
#include "ydn/linalg.hpp"

using namespace ydn;
using namespace ydn::linalg;

namespace {

Mat from_longs(int rows, int cols, std::initializer_list<long> vals) {
    Mat m = zero(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = cyc(*it++);
    return m;
}

}  // namespace

TEST_CASE("rref canonical form and pivots") {
    Mat A = from_longs(3, 4, {1, 2, 0, 3, 2, 4, 1, 7, 0, 0, 1, 1});
    Echelon e = rref(A);
    CHECK(e.rank == 2);
    CHECK(e.pivots == std::vector<int>{0, 2});
    // RREF rows: [1 2 0 3], [0 0 1 1]
    CHECK(e.rref(0, 1) == cyc(2));
    CHECK(e.rref(0, 3) == cyc(3));
    CHECK(e.rref(1, 3) == cyc(1));
    CHECK(e.rref(2, 0).is_zero());
}

TEST_CASE("kernel is canonical and annihilated") {
    Mat A = from_longs(2, 4, {1, 2, 3, 4, 0, 0, 1, 2});
    Mat K = kernel(A);
    CHECK(K.cols() == 2);
    CHECK(is_zero_mat(A * K));
    // Free columns 1 and 3; each kernel vector has a unit in its free slot.
    CHECK(K(1, 0) == cyc(1));
    CHECK(K(3, 1) == cyc(1));
    CHECK(K(3, 0).is_zero());
    CHECK(K(1, 1).is_zero());
}

TEST_CASE("rank over a cyclotomic field") {
    cyc i = cyc::root(4, 1);
    Mat A = zero(2, 2);
    A(0, 0) = cyc(1);
    A(0, 1) = i;
    A(1, 0) = -i;
    A(1, 1) = cyc(1);  // row2 = -i * row1
    CHECK(rank(A) == 1);
    A(1, 1) = cyc(2);
    CHECK(rank(A) == 2);
}

TEST_CASE("solve and inconsistency detection") {
    Mat A = from_longs(3, 2, {1, 0, 0, 1, 1, 1});
    Mat b = from_longs(3, 1, {2, 3, 5});
    bool ok = false;
    Mat x = solve(A, b, &ok);
    CHECK(ok);
    CHECK(x(0, 0) == cyc(2));
    CHECK(x(1, 0) == cyc(3));
    b(2, 0) = cyc(6);
    solve(A, b, &ok);
    CHECK_FALSE(ok);
}

TEST_CASE("inverse") {
    cyc z = cyc::root(3, 1);
    Mat A = zero(2, 2);
    A(0, 0) = z;
    A(0, 1) = cyc(1);
    A(1, 0) = cyc(1);
    A(1, 1) = z;
    Mat B = inverse(A);
    CHECK(is_zero_mat(A * B - identity(2)));
    CHECK(is_zero_mat(B * A - identity(2)));

    Mat S = from_longs(2, 2, {1, 2, 2, 4});
    CHECK_THROWS_AS(inverse(S), singular_error);
}

TEST_CASE("independent columns are lexicographically first") {
    Mat A = from_longs(2, 4, {0, 1, 1, 0, 0, 2, 2, 1});
    CHECK(independent_columns(A) == std::vector<int>{1, 3});
}

TEST_CASE("kronecker product") {
    Mat A = from_longs(2, 2, {1, 2, 3, 4});
    Mat B = from_longs(1, 2, {5, 7});
    Mat K = kron(A, B);
    CHECK(K.rows() == 2);
    CHECK(K.cols() == 4);
    CHECK(K(0, 0) == cyc(5));
    CHECK(K(0, 1) == cyc(7));
    CHECK(K(0, 2) == cyc(10));
    CHECK(K(1, 3) == cyc(28));
    CHECK(is_zero_mat(kron_chain({}) - identity(1)));
}

TEST_CASE("span utilities") {
    Mat A = from_longs(3, 2, {1, 0, 0, 1, 0, 0});
    Mat B = from_longs(3, 2, {1, 0, 1, 0, 0, 1});
    Mat I = span_intersection(A, B);
    CHECK(I.cols() == 1);  // span{e1+e2}
    CHECK(in_col_span(A, I));
    CHECK(in_col_span(B, I));
    CHECK(same_col_span(A, A * from_longs(2, 2, {1, 1, 0, 2})));
    CHECK_FALSE(same_col_span(A, B));
}
