#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ydn/cyclotomic.hpp"
#include "ydn/errors.hpp"

namespace ydn {

/**
 * @brief Finite group with elements indexed 0..order-1 and explicit tables.
 *
 * Built either from invariant factors (abelian products Z/d1 x ... x Z/dk,
 * elements are mixed-radix tuples) or from a raw multiplication table that is
 * validated for closure, identity, inverses and associativity.
 */
class FiniteGroup {
public:
    static FiniteGroup from_invariant_factors(const std::vector<long>& factors);
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

    int order() const { return (int)mul_.size(); }
    int id() const { return id_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

    long element_order(int g) const;
    long exponent() const;
    bool is_abelian() const;

    std::vector<int> conjugacy_class(int x) const;
    std::vector<int> centralizer(int x) const;

    /// Invariant factors when built abelian, empty for table-built groups.
    const std::vector<long>& invariant_factors() const { return invfac_; }
    std::vector<long> tuple_of(int g) const;
    int element_of(const std::vector<long>& tuple) const;

    std::string elem_str(int g) const;

private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int id_ = 0;
    std::vector<long> invfac_;
};

/**
 * @brief Concrete realization of a diagonal braiding datum.
 *
 * From a theta x theta matrix of roots of unity q_ij, synthesizes
 * G = (Z/N)^theta with N = lcm of the q_ij orders, distinguished degrees
 * g_i = e_i, and characters chi_j with chi_j(g_i) = q_ij.
 */
struct DiagonalData {
    std::shared_ptr<const FiniteGroup> G;
    long N = 1;
    int theta = 0;
    std::vector<int> g;  // element index of g_i
    Mat q;               // the defining matrix

    /// chi_j evaluated on an arbitrary group element.
    cyc character(int j, int elem) const;
};

DiagonalData make_diagonal(const Mat& q);

}  // namespace ydn
