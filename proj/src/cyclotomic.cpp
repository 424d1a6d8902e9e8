#include "ydn/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ydn {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

using qpoly = std::vector<mpq_class>;  // coefficient vector, index = power

void trim(qpoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division a / b of rational polynomials, remainder must vanish.
qpoly poly_div_exact(qpoly a, const qpoly& b) {
    qpoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
        size_t d = a.size() - b.size();
        mpq_class lead = a.back() / b.back();
        q[d] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[d + i] -= lead * b[i];
        trim(a);
        if (a.empty()) break;
    }
    if (!a.empty()) throw arithmetic_error("poly_div_exact: nonzero remainder");
    return q;
}

// Phi_n via x^n - 1 = prod_{d | n} Phi_d.
qpoly cyclotomic_poly(long n) {
    qpoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        qpoly phid = cyclotomic_poly(d);
        num = poly_div_exact(num, phid);
    }
    return num;
}

struct field_ctx {
    long n = 1;
    long phi = 1;
    qpoly modulus;                     // Phi_n, degree phi
    std::vector<qpoly> pow;           // x^k mod Phi_n for k = 0..n-1, each length phi
};

const field_ctx& ctx_for(long n) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<field_ctx>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(n);
    if (it != registry.end()) return *it->second;
    if (n < 1) throw arithmetic_error("conductor must be >= 1");
    auto ctx = std::make_unique<field_ctx>();
    ctx->n = n;
    ctx->phi = euler_phi(n);
    ctx->modulus = cyclotomic_poly(n);
    ctx->pow.resize(n);
    // Running remainder of x^k modulo the monic modulus.
    qpoly cur(1, mpq_class(1));
    for (long k = 0; k < n; ++k) {
        qpoly padded(ctx->phi, mpq_class(0));
        for (size_t i = 0; i < cur.size(); ++i) padded[i] = cur[i];
        ctx->pow[k] = padded;
        // cur <- cur * x mod Phi
        cur.insert(cur.begin(), mpq_class(0));
        if ((long)cur.size() > ctx->phi) {
            mpq_class lead = cur.back();
            cur.pop_back();
            if (lead != 0)
                for (long i = 0; i < ctx->phi; ++i) cur[i] -= lead * ctx->modulus[i];
        }
        trim(cur);
    }
    const field_ctx& ref = *ctx;
    registry.emplace(n, std::move(ctx));
    return ref;
}

long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

cyc cyc::root(long n, long k) {
    if (n < 1) throw arithmetic_error("root: order must be >= 1");
    const field_ctx& f = ctx_for(n);
    cyc v;
    v.n_ = n;
    v.c_ = f.pow[mod_pos(k, n)];
    v.c_.resize(f.phi);
    v.collapse();
    return v;
}

cyc cyc::rational(long p, long q) {
    if (q == 0) throw arithmetic_error("rational: zero denominator");
    mpq_class v(p, q);
    v.canonicalize();
    return cyc(v);
}

bool cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

void cyc::collapse() {
    if (n_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    mpq_class keep = c_[0];
    n_ = 1;
    c_.assign(1, keep);
}

cyc cyc::promoted(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw arithmetic_error("promoted: old conductor must divide new");
    const field_ctx& f = ctx_for(m);
    cyc v;
    v.n_ = m;
    v.c_.assign(f.phi, mpq_class(0));
    long step = m / n_;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const qpoly& row = f.pow[mod_pos((long)k * step, m)];
        for (long i = 0; i < f.phi; ++i) v.c_[i] += c_[k] * row[i];
    }
    return v;
}

void cyc::align(cyc& a, cyc& b) {
    long m = lcm_long(a.n_, b.n_);
    if (a.n_ != m) a = a.promoted(m);
    if (b.n_ != m) b = b.promoted(m);
}

cyc cyc::operator-() const {
    cyc v = *this;
    for (auto& x : v.c_) x = -x;
    return v;
}

cyc& cyc::operator+=(const cyc& o) {
    cyc rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    collapse();
    return *this;
}

cyc& cyc::operator-=(const cyc& o) {
    cyc rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    collapse();
    return *this;
}

cyc& cyc::operator*=(const cyc& o) {
    cyc rhs = o;
    align(*this, rhs);
    if (n_ == 1) {
        c_[0] *= rhs.c_[0];
        return *this;
    }
    const field_ctx& f = ctx_for(n_);
    std::vector<mpq_class> prod(2 * f.phi - 1, mpq_class(0));
    for (long i = 0; i < f.phi; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < f.phi; ++j) {
            if (rhs.c_[j] == 0) continue;
            prod[i + j] += c_[i] * rhs.c_[j];
        }
    }
    // Fold powers >= phi back down via x^k mod Phi_n (k < n always holds: k <= 2phi-2 < n
    // fails for n <= 2 only when phi = 1 and prod has length 1, so no folding is needed there).
    std::vector<mpq_class> out(f.phi, mpq_class(0));
    for (long k = 0; k < (long)prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (k < f.phi) {
            out[k] += prod[k];
        } else {
            const qpoly& row = f.pow[mod_pos(k, n_)];
            for (long i = 0; i < f.phi; ++i) out[i] += prod[k] * row[i];
        }
    }
    c_ = std::move(out);
    collapse();
    return *this;
}

bool cyc::operator==(const cyc& o) const {
    cyc a = *this, b = o;
    align(a, b);
    return a.c_ == b.c_;
}

cyc cyc::inv() const {
    if (is_zero()) throw arithmetic_error("inv: division by zero");
    if (n_ == 1) {
        cyc v;
        v.c_[0] = 1 / c_[0];
        return v;
    }
    // Extended Euclid in Q[x] against the (irreducible) modulus.
    const field_ctx& f = ctx_for(n_);
    qpoly r0 = f.modulus, r1(c_.begin(), c_.end());
    trim(r1);
    qpoly t0, t1(1, mpq_class(1));
    while (true) {
        // r0 = q*r1 + r2
        qpoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
        qpoly r2 = r0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            size_t d = r2.size() - r1.size();
            mpq_class lead = r2.back() / r1.back();
            q.resize(std::max(q.size(), d + 1));
            q[d] += lead;
            for (size_t i = 0; i < r1.size(); ++i) r2[d + i] -= lead * r1[i];
            trim(r2);
        }
        // t2 = t0 - q*t1
        qpoly t2 = t0;
        t2.resize(std::max(t0.size(), q.size() + t1.size()), mpq_class(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
        }
        trim(t2);
        if (r2.empty()) {
            // r1 is the gcd, a nonzero constant since Phi_n is irreducible.
            if (r1.size() != 1) throw arithmetic_error("inv: modulus not coprime to value");
            cyc v;
            v.n_ = n_;
            v.c_.assign(f.phi, mpq_class(0));
            for (size_t i = 0; i < t1.size() && i < (size_t)f.phi; ++i) v.c_[i] = t1[i] / r1[0];
            v.collapse();
            return v;
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
}

cyc cyc::galois(long j) const {
    if (n_ == 1) return *this;
    long jj = mod_pos(j, n_);
    if (gcd_long(jj, n_) != 1) throw arithmetic_error("galois: exponent not coprime to conductor");
    const field_ctx& f = ctx_for(n_);
    cyc v;
    v.n_ = n_;
    v.c_.assign(f.phi, mpq_class(0));
    for (long k = 0; k < f.phi; ++k) {
        if (c_[k] == 0) continue;
        const qpoly& row = f.pow[mod_pos(k * jj, n_)];
        for (long i = 0; i < f.phi; ++i) v.c_[i] += c_[k] * row[i];
    }
    v.collapse();
    return v;
}

long cyc::root_order() const {
    cyc p = *this;
    for (long t = 1; t <= 2 * n_; ++t) {
        if (p.is_one()) return t;
        p *= *this;
    }
    return 0;
}

std::string cyc::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const mpq_class& coef, long k) {
        if (coef == 0) return;
        mpq_class a = coef;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z(" << n_ << "," << k << ")";
        }
    };
    for (long k = 0; k < (long)c_.size(); ++k) emit(c_[k], k);
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const cyc& v) { return os << v.str(); }

}  // namespace ydn
