#include "ydn/group.hpp"

#include <algorithm>
#include <sstream>

namespace ydn {

FiniteGroup FiniteGroup::from_invariant_factors(const std::vector<long>& factors) {
    for (long d : factors)
        if (d < 1) throw not_a_group("invariant factors must be positive");
    long n = 1;
    for (long d : factors) n *= d;
    if (n > 100000) throw not_a_group("group order too large");
    FiniteGroup G;
    G.invfac_ = factors;
    G.mul_.assign(n, std::vector<int>(n));
    G.inv_.assign(n, 0);
    auto decode = [&](long g) {
        std::vector<long> t(factors.size());
        for (size_t i = factors.size(); i-- > 0;) {
            t[i] = g % factors[i];
            g /= factors[i];
        }
        return t;
    };
    auto encode = [&](const std::vector<long>& t) {
        long g = 0;
        for (size_t i = 0; i < factors.size(); ++i) g = g * factors[i] + t[i];
        return (int)g;
    };
    for (long a = 0; a < n; ++a) {
        auto ta = decode(a);
        for (long b = 0; b < n; ++b) {
            auto tb = decode(b);
            std::vector<long> tc(factors.size());
            for (size_t i = 0; i < factors.size(); ++i) tc[i] = (ta[i] + tb[i]) % factors[i];
            G.mul_[a][b] = encode(tc);
        }
        std::vector<long> ti(factors.size());
        for (size_t i = 0; i < factors.size(); ++i) ti[i] = (factors[i] - ta[i]) % factors[i];
        G.inv_[a] = encode(ti);
    }
    G.id_ = 0;
    return G;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
    const int n = (int)table.size();
    if (n == 0) throw not_a_group("empty table");
    for (const auto& row : table) {
        if ((int)row.size() != n) throw not_a_group("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw not_a_group("table entry out of range");
    }
    // Latin square: cancellation on both sides.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            if (seen_row[table[a][b]]) throw not_a_group("row is not a permutation");
            seen_row[table[a][b]] = true;
            if (seen_col[table[b][a]]) throw not_a_group("column is not a permutation");
            seen_col[table[b][a]] = true;
        }
    }
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw not_a_group("no identity element");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw not_a_group("multiplication is not associative");
    FiniteGroup G;
    G.mul_ = table;
    G.id_ = id;
    G.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == id) {
                if (table[b][a] != id) throw not_a_group("one-sided inverse");
                G.inv_[a] = b;
                break;
            }
        }
        if (G.inv_[a] < 0) throw not_a_group("missing inverse");
    }
    return G;
}

long FiniteGroup::element_order(int g) const {
    long t = 1;
    int p = g;
    while (p != id_) {
        p = mul(p, g);
        ++t;
    }
    return t;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (int g = 0; g < order(); ++g) e = lcm_long(e, element_order(g));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::conjugacy_class(int x) const {
    std::vector<bool> seen(order(), false);
    std::vector<int> cls;
    for (int g = 0; g < order(); ++g) {
        int y = conjugate(g, x);
        if (!seen[y]) {
            seen[y] = true;
            cls.push_back(y);
        }
    }
    std::sort(cls.begin(), cls.end());
    return cls;
}

std::vector<int> FiniteGroup::centralizer(int x) const {
    std::vector<int> c;
    for (int g = 0; g < order(); ++g)
        if (mul(g, x) == mul(x, g)) c.push_back(g);
    return c;
}

std::vector<long> FiniteGroup::tuple_of(int g) const {
    if (invfac_.empty()) throw input_error("tuple_of: group has no abelian coordinates");
    std::vector<long> t(invfac_.size());
    long v = g;
    for (size_t i = invfac_.size(); i-- > 0;) {
        t[i] = v % invfac_[i];
        v /= invfac_[i];
    }
    return t;
}

int FiniteGroup::element_of(const std::vector<long>& tuple) const {
    if (tuple.size() != invfac_.size()) throw input_error("element_of: wrong tuple length");
    long g = 0;
    for (size_t i = 0; i < invfac_.size(); ++i) {
        long v = tuple[i] % invfac_[i];
        if (v < 0) v += invfac_[i];
        g = g * invfac_[i] + v;
    }
    return (int)g;
}

std::string FiniteGroup::elem_str(int g) const {
    if (invfac_.empty()) {
        std::ostringstream os;
        os << "g" << g;
        return os.str();
    }
    auto t = tuple_of(g);
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

cyc DiagonalData::character(int j, int elem) const {
    auto t = G->tuple_of(elem);
    cyc v(1);
    for (int i = 0; i < theta; ++i) {
        for (long rep = 0; rep < t[i]; ++rep) v *= q(i, j);
    }
    return v;
}

DiagonalData make_diagonal(const Mat& q) {
    if (q.rows() != q.cols() || q.rows() == 0) throw input_error("diagonal matrix must be square");
    const int theta = (int)q.rows();
    long N = 1;
    for (int i = 0; i < theta; ++i)
        for (int j = 0; j < theta; ++j) {
            long ord = q(i, j).root_order();
            if (ord == 0) throw input_error("diagonal entries must be roots of unity");
            N = lcm_long(N, ord);
        }
    DiagonalData d;
    d.N = N;
    d.theta = theta;
    d.q = q;
    d.G = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_invariant_factors(std::vector<long>(theta, N)));
    d.g.resize(theta);
    for (int i = 0; i < theta; ++i) {
        std::vector<long> t(theta, 0);
        t[i] = 1 % N;
        d.g[i] = d.G->element_of(t);
    }
    return d;
}

}  // namespace ydn
