#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>

#include "ydn/group.hpp"
#include "ydn/linalg.hpp"

using namespace ydn;

namespace {

// Independent oracle: S3 as permutations of {0,1,2} under composition,
// elements enumerated in lexicographic order.
std::vector<std::array<int, 3>> s3_perms() {
    std::array<int, 3> p{0, 1, 2};
    std::vector<std::array<int, 3>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

std::vector<std::vector<int>> s3_table() {
    auto perms = s3_perms();
    auto index_of = [&](const std::array<int, 3>& p) {
        return (int)(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c;
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (a.b)(i) = a(b(i))
            t[a][b] = index_of(c);
        }
    return t;
}

}  // namespace

TEST_CASE("abelian group from invariant factors") {
    FiniteGroup G = FiniteGroup::from_invariant_factors({2, 2});
    CHECK(G.order() == 4);
    CHECK(G.is_abelian());
    CHECK(G.exponent() == 2);
    for (int g = 0; g < 4; ++g) {
        CHECK(G.mul(g, g) == G.id());
        CHECK(G.inv(g) == g);
    }
    CHECK(G.elem_str(G.element_of({1, 0})) == "(1,0)");
    FiniteGroup C6 = FiniteGroup::from_invariant_factors({6});
    CHECK(C6.element_order(C6.element_of({1})) == 6);
    CHECK(C6.element_order(C6.element_of({4})) == 3);
}

TEST_CASE("S3 from table against the permutation oracle") {
    auto table = s3_table();
    FiniteGroup G = FiniteGroup::from_table(table);
    CHECK(G.order() == 6);
    CHECK_FALSE(G.is_abelian());
    CHECK(G.exponent() == 6);

    // Element orders: identity 1, three transpositions 2, two 3-cycles 3.
    std::vector<long> orders;
    for (int g = 0; g < 6; ++g) orders.push_back(G.element_order(g));
    CHECK(std::count(orders.begin(), orders.end(), 1) == 1);
    CHECK(std::count(orders.begin(), orders.end(), 2) == 3);
    CHECK(std::count(orders.begin(), orders.end(), 3) == 2);

    // Conjugacy classes of sizes 1, 2, 3; centralizer orders 6, 3, 2.
    for (int x = 0; x < 6; ++x) {
        auto cls = G.conjugacy_class(x);
        auto cen = G.centralizer(x);
        CHECK((int)cls.size() * (int)cen.size() == 6);
        long o = G.element_order(x);
        if (o == 1) CHECK(cls.size() == 1);
        if (o == 2) CHECK(cls.size() == 3);
        if (o == 3) CHECK(cls.size() == 2);
    }
}

TEST_CASE("table validation failures") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), not_a_group);  // not Latin
    // Latin square with no two-sided identity (subtraction mod 3).
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), not_a_group);
    // Latin square with identity but non-associative (order 5 loop).
    std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(loop), not_a_group);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {0, 0}}), not_a_group);
}

TEST_CASE("diagonal datum synthesis") {
    Mat q = linalg::zero(2, 2);
    q(0, 0) = cyc(-1);
    q(1, 1) = cyc(-1);
    q(0, 1) = cyc(1);
    q(1, 0) = cyc(-1);  // E1
    DiagonalData d = make_diagonal(q);
    CHECK(d.N == 2);
    CHECK(d.G->order() == 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(d.character(j, d.g[i]) == q(i, j));
    // chi_j is a homomorphism.
    for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                CHECK(d.character(j, d.G->mul(a, b)) == d.character(j, a) * d.character(j, b));

    Mat qz = linalg::zero(1, 1);
    qz(0, 0) = cyc::root(3, 1);
    DiagonalData d3 = make_diagonal(qz);
    CHECK(d3.N == 3);
    CHECK(d3.G->order() == 3);

    qz(0, 0) = cyc(2);
    CHECK_THROWS_AS(make_diagonal(qz), input_error);
}
