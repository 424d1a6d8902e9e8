#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ydn {

/// Thrown on division by zero or inversion of a singular quantity.
class arithmetic_error : public std::runtime_error {
public:
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

/**
 * @brief Exact element of the cyclotomic field Q(zeta_n).
 *
 * Values are stored as coefficient vectors of length phi(n) over arbitrary
 * precision rationals, reduced modulo the n-th cyclotomic polynomial.
 * Mixed-conductor arithmetic promotes both operands to the lcm conductor.
 * A value whose non-constant coordinates vanish collapses to conductor 1,
 * so rational values have a unique representation regardless of provenance.
 *
 * No floating point is used anywhere; all operations are exact.
 */
class cyc {
public:
    cyc() : n_(1), c_(1) {}
    cyc(long v) : n_(1), c_(1) { c_[0] = v; }
    cyc(int v) : cyc(static_cast<long>(v)) {}
    cyc(const mpq_class& v) : n_(1), c_(1) { c_[0] = v; }

    /// zeta_n^k, reduced. Requires n >= 1.
    static cyc root(long n, long k);

    /// p/q as a conductor-1 value. Requires q != 0.
    static cyc rational(long p, long q);

    long conductor() const { return n_; }
    bool is_zero() const;
    bool is_one() const { return *this == cyc(1); }
    bool is_rational() const { return n_ == 1; }

    /// The constant coefficient; equals the value itself when is_rational().
    const mpq_class& rational_part() const { return c_[0]; }

    cyc operator-() const;
    cyc& operator+=(const cyc& o);
    cyc& operator-=(const cyc& o);
    cyc& operator*=(const cyc& o);
    cyc& operator/=(const cyc& o) { return *this *= o.inv(); }

    friend cyc operator+(cyc a, const cyc& b) { return a += b; }
    friend cyc operator-(cyc a, const cyc& b) { return a -= b; }
    friend cyc operator*(cyc a, const cyc& b) { return a *= b; }
    friend cyc operator/(cyc a, const cyc& b) { return a /= b; }

    bool operator==(const cyc& o) const;
    bool operator!=(const cyc& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws arithmetic_error on zero.
    cyc inv() const;

    /// Galois twist zeta -> zeta^j; requires gcd(j, conductor) == 1.
    cyc galois(long j) const;

    /// Complex conjugation, zeta -> zeta^{-1}.
    cyc conj() const { return galois(-1); }

    /// Smallest t >= 1 with (*this)^t == 1, or 0 if *this is not a root of unity.
    long root_order() const;

    /// Re-express in Q(zeta_m); requires conductor() | m.
    cyc promoted(long m) const;

    /// Canonical text form: rational constants plus "c*z(n,k)" terms, increasing k.
    std::string str() const;

private:
    long n_;
    std::vector<mpq_class> c_;

    void collapse();  // shrink to conductor 1 when the value is rational
    static void align(cyc& a, cyc& b);
};

std::ostream& operator<<(std::ostream& os, const cyc& v);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);

}  // namespace ydn

// Eigen interop: lets Eigen dense types carry the exact scalar.
#include <Eigen/Core>

namespace Eigen {
template <>
struct NumTraits<ydn::cyc> : GenericNumTraits<ydn::cyc> {
    typedef ydn::cyc Real;
    typedef ydn::cyc NonInteger;
    typedef ydn::cyc Nested;
    typedef ydn::cyc Literal;
    static inline Real epsilon() { return ydn::cyc(0); }
    static inline Real dummy_precision() { return ydn::cyc(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 120
    };
};
}  // namespace Eigen

namespace ydn {

using Mat = Eigen::Matrix<cyc, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<cyc, Eigen::Dynamic, 1>;

}  // namespace ydn
