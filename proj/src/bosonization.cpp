#include "ydn/bosonization.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ydn {

namespace {

template <typename MapT, typename KeyT>
void acc(MapT& out, const KeyT& k, const cyc& cf) {
    if (cf.is_zero()) return;
    auto it = out.find(k);
    if (it == out.end()) {
        out.emplace(k, cf);
        return;
    }
    it->second += cf;
    if (it->second.is_zero()) out.erase(it);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (&a == &b) return true;
    if (a.order() != b.order()) return false;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (a.mul(x, y) != b.mul(x, y)) return false;
    return true;
}

}  // namespace

Bosonization::Bosonization(const NicholsTruncation& R, std::shared_ptr<const FiniteGroup> H)
    : R_(R), G_(R.module_backed() ? R.base().G : nullptr) {
    if (!R_.module_backed())
        throw input_error("bosonization requires a module-backed truncation");
    if (!H || !same_group(*G_, *H)) throw input_error("group mismatch");
}

std::vector<BKey> Bosonization::basis() const {
    std::vector<BKey> out;
    for (int n = 0; n <= R_.cutoff(); ++n)
        for (int i = 0; i < R_.dim(n); ++i)
            for (int g = 0; g < G_->order(); ++g) out.push_back({n, i, g});
    return out;
}

BosonElement Bosonization::unit() const { return group_elem(G_->id()); }

BosonElement Bosonization::group_elem(int g) const {
    BosonElement out;
    out.emplace(BKey{0, 0, g}, cyc(1));
    return out;
}

BosonElement Bosonization::single(int deg, int idx, int g) const {
    BosonElement out;
    out.emplace(BKey{deg, idx, g}, cyc(1));
    return out;
}

BosonElement Bosonization::embed(int deg, const Mat& col, int g) const {
    BosonElement out;
    for (int i = 0; i < col.rows(); ++i)
        if (!col(i, 0).is_zero()) out.emplace(BKey{deg, i, g}, col(i, 0));
    return out;
}

Mat Bosonization::r_part(const BosonElement& a, int deg) const {
    Mat out = linalg::zero(R_.dim(deg), 1);
    for (const auto& [k, cf] : a) {
        if (k.deg != deg || k.grp != G_->id())
            throw input_error("element does not lie in a single degree of the braided part");
        out(k.idx, 0) = cf;
    }
    return out;
}

void Bosonization::add_term(BosonElement& out, const BKey& k, const cyc& cf) const {
    acc(out, k, cf);
}

BosonElement Bosonization::mul(const BosonElement& a, const BosonElement& b) const {
    BosonElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const int n = ka.deg + kb.deg;
            if (n > R_.cutoff() && !R_.complete())
                throw cutoff_exceeded("product degree exceeds the truncation");
            if (R_.dim(n) == 0) continue;
            const cyc cf = ca * cb;
            const Mat v = R_.h_action(ka.grp, kb.deg);
            const Mat C = R_.mult(ka.deg, kb.deg);
            const int gh = G_->mul(ka.grp, kb.grp);
            const int db = R_.dim(kb.deg);
            for (int jp = 0; jp < db; ++jp) {
                if (v(jp, kb.idx).is_zero()) continue;
                const cyc w = cf * v(jp, kb.idx);
                for (int k = 0; k < C.rows(); ++k) {
                    const cyc& c = C(k, ka.idx * db + jp);
                    if (!c.is_zero()) acc(out, BKey{n, k, gh}, w * c);
                }
            }
        }
    return out;
}

BosonElement Bosonization::mul(const BosonElement& a, const BosonElement& b,
                               const BosonElement& c) const {
    return mul(mul(a, b), c);
}

BosonPair Bosonization::comult(const BosonElement& el) const {
    BosonPair out;
    for (const auto& [k, cf] : el)
        for (int a = 0; a <= k.deg; ++a) {
            const int b = k.deg - a;
            const Mat C = R_.comult(a, b);
            if (C.rows() == 0) continue;
            const int db = R_.dim(b);
            for (int p = 0; p < R_.dim(a); ++p)
                for (int q = 0; q < db; ++q) {
                    const cyc& c = C(p * db + q, k.idx);
                    if (c.is_zero()) continue;
                    const int g1 = G_->mul(R_.basis_gdeg(b, q), k.grp);
                    acc(out, std::array<BKey, 2>{BKey{a, p, g1}, BKey{b, q, k.grp}}, cf * c);
                }
        }
    return out;
}

BosonTriple Bosonization::comult2(const BosonElement& el) const {
    BosonTriple out;
    for (const auto& [kp, cf] : comult(el)) {
        BosonElement leg;
        leg.emplace(kp[0], cyc(1));
        for (const auto& [k2, c2] : comult(leg))
            acc(out, std::array<BKey, 3>{k2[0], k2[1], kp[1]}, cf * c2);
    }
    return out;
}

cyc Bosonization::counit(const BosonElement& a) const {
    cyc out(0);
    for (const auto& [k, cf] : a)
        if (k.deg == 0) out += cf;
    return out;
}

BosonElement Bosonization::antipode(const BosonElement& a) const {
    BosonElement out;
    for (const auto& [k, cf] : a) {
        // S(r#g) = (gamma g)^{-1} (S_R(r)#e) for r of group degree gamma
        const int gi = G_->inv(G_->mul(R_.basis_gdeg(k.deg, k.idx), k.grp));
        const Mat col = R_.antipode(k.deg).col(k.idx);
        for (const auto& [k2, c2] : mul(group_elem(gi), embed(k.deg, col, G_->id())))
            acc(out, k2, cf * c2);
    }
    return out;
}

BosonElement Bosonization::antipode_inv(const BosonElement& a) const {
    BosonElement out;
    for (const auto& [k, cf] : a) {
        // S^{-1}(r#g) = g^{-1} (S_R^{-1}(r)#e) gamma^{-1}
        const int hi = G_->inv(k.grp);
        const int gi = G_->inv(R_.basis_gdeg(k.deg, k.idx));
        const Mat col = R_.antipode_inv(k.deg).col(k.idx);
        const BosonElement t =
            mul(mul(group_elem(hi), embed(k.deg, col, G_->id())), group_elem(gi));
        for (const auto& [k2, c2] : t) acc(out, k2, cf * c2);
    }
    return out;
}

BosonElement Bosonization::proj_pi(const BosonElement& a) const {
    BosonElement out;
    for (const auto& [k, cf] : a)
        if (k.deg == 0) acc(out, k, cf);
    return out;
}

BosonElement Bosonization::proj_vartheta(const BosonElement& a) const {
    BosonElement out;
    for (const auto& [k, cf] : a) acc(out, BKey{k.deg, k.idx, G_->id()}, cf);
    return out;
}

BosonElement Bosonization::h_adjoint(int g, const BosonElement& a) const {
    return mul(group_elem(g), mul(a, group_elem(G_->inv(g))));
}

bool Bosonization::is_zero(const BosonElement& a) { return a.empty(); }
bool Bosonization::equal(const BosonElement& a, const BosonElement& b) { return a == b; }
bool Bosonization::equal(const BosonPair& a, const BosonPair& b) { return a == b; }
bool Bosonization::equal(const BosonTriple& a, const BosonTriple& b) { return a == b; }

bool CheckReport::all_ok() const {
    for (const auto& [name, ok] : items)
        if (!ok) return false;
    return true;
}

std::string CheckReport::failures() const {
    std::string out;
    for (const auto& [name, ok] : items) {
        if (ok) continue;
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

CheckReport hopf_suite(const Bosonization& A) {
    CheckReport rep;
    const NicholsTruncation& R = A.truncation();
    const FiniteGroup& G = A.group();
    const int D = A.cutoff();
    const int e = G.id();
    const std::vector<BKey> bs = A.basis();
    auto one = [&](const BKey& k) { return A.single(k.deg, k.idx, k.grp); };

    bool ok = true;
    for (const BKey& a : bs) {
        const BosonElement el = one(a);
        ok = ok && A.equal(A.mul(A.unit(), el), el) && A.equal(A.mul(el, A.unit()), el);
    }
    rep.add("unit", ok);

    ok = true;
    for (const BKey& a : bs)
        for (const BKey& b : bs) {
            if (a.deg + b.deg > D) continue;
            for (const BKey& c : bs) {
                if (a.deg + b.deg + c.deg > D) continue;
                const BosonElement ab = A.mul(one(a), one(b));
                ok = ok && A.equal(A.mul(ab, one(c)), A.mul(one(a), A.mul(one(b), one(c))));
            }
        }
    rep.add("multiplication associative", ok);

    ok = true;
    for (const BKey& a : bs) {
        BosonTriple right;
        for (const auto& [kp, cf] : A.comult(one(a))) {
            BosonElement leg;
            leg.emplace(kp[1], cyc(1));
            for (const auto& [k2, c2] : A.comult(leg)) {
                const std::array<BKey, 3> key{kp[0], k2[0], k2[1]};
                auto it = right.find(key);
                if (it == right.end())
                    right.emplace(key, cf * c2);
                else if ((it->second += cf * c2).is_zero())
                    right.erase(it);
            }
        }
        ok = ok && A.equal(A.comult2(one(a)), right);
    }
    rep.add("comultiplication coassociative", ok);

    ok = true;
    for (const BKey& a : bs) {
        BosonElement left, right;
        for (const auto& [kp, cf] : A.comult(one(a))) {
            BosonElement l1, l2;
            l1.emplace(kp[0], cyc(1));
            l2.emplace(kp[1], cyc(1));
            acc(right, kp[1], A.counit(l1) * cf);
            acc(left, kp[0], A.counit(l2) * cf);
        }
        ok = ok && A.equal(left, one(a)) && A.equal(right, one(a));
    }
    rep.add("counit", ok);

    ok = true;
    for (const BKey& a : bs)
        for (const BKey& b : bs) {
            if (a.deg + b.deg > D) continue;
            const BosonPair lhs = A.comult(A.mul(one(a), one(b)));
            BosonPair rhs;
            for (const auto& [ka, ca] : A.comult(one(a)))
                for (const auto& [kb, cb] : A.comult(one(b))) {
                    BosonElement f = A.mul(A.single(ka[0].deg, ka[0].idx, ka[0].grp),
                                           A.single(kb[0].deg, kb[0].idx, kb[0].grp));
                    BosonElement s = A.mul(A.single(ka[1].deg, ka[1].idx, ka[1].grp),
                                           A.single(kb[1].deg, kb[1].idx, kb[1].grp));
                    const cyc cf = ca * cb;
                    for (const auto& [kf, vf] : f)
                        for (const auto& [ks, vs] : s)
                            acc(rhs, std::array<BKey, 2>{kf, ks}, cf * vf * vs);
                }
            ok = ok && A.equal(lhs, rhs);
        }
    rep.add("comultiplication multiplicative", ok);

    ok = true;
    for (const BKey& a : bs) {
        BosonElement l, r;
        for (const auto& [kp, cf] : A.comult(one(a))) {
            for (const auto& [k2, c2] :
                 A.mul(A.antipode(A.single(kp[0].deg, kp[0].idx, kp[0].grp)),
                       A.single(kp[1].deg, kp[1].idx, kp[1].grp)))
                acc(l, k2, cf * c2);
            for (const auto& [k2, c2] :
                 A.mul(A.single(kp[0].deg, kp[0].idx, kp[0].grp),
                       A.antipode(A.single(kp[1].deg, kp[1].idx, kp[1].grp))))
                acc(r, k2, cf * c2);
        }
        BosonElement expect;
        const cyc eps = A.counit(one(a));
        if (!eps.is_zero()) expect.emplace(BKey{0, 0, e}, eps);
        ok = ok && A.equal(l, expect) && A.equal(r, expect);
    }
    rep.add("antipode convolution identity", ok);

    ok = true;
    for (const BKey& a : bs)
        ok = ok && A.equal(A.antipode_inv(A.antipode(one(a))), one(a)) &&
             A.equal(A.antipode(A.antipode_inv(one(a))), one(a));
    rep.add("antipode invertible", ok);

    ok = true;
    for (int g = 0; g < G.order(); ++g)
        for (int n = 1; n <= D; ++n)
            for (int i = 0; i < R.dim(n); ++i) {
                const BosonElement r = A.single(n, i, e);
                const BosonElement gr = A.embed(n, R.h_action(g, n).col(i), e);
                // h r = (h . r) h and r h = h (h^{-1} . r)
                ok = ok && A.equal(A.mul(A.group_elem(g), r), A.mul(gr, A.group_elem(g)));
                const BosonElement rg = A.embed(n, R.h_action(G.inv(g), n).col(i), e);
                ok = ok && A.equal(A.mul(r, A.group_elem(g)), A.mul(A.group_elem(g), rg));
            }
    rep.add("group commutation rules", ok);

    ok = true;
    for (const BKey& a : bs) {
        BosonElement dec;
        for (const auto& [kp, cf] : A.comult(one(a))) {
            const BosonElement f = A.proj_vartheta(A.single(kp[0].deg, kp[0].idx, kp[0].grp));
            const BosonElement s = A.proj_pi(A.single(kp[1].deg, kp[1].idx, kp[1].grp));
            for (const auto& [k2, c2] : A.mul(f, s)) acc(dec, k2, cf * c2);
        }
        ok = ok && A.equal(dec, one(a));
    }
    rep.add("projection decomposition", ok);

    ok = true;
    for (const BKey& a : bs) {
        BosonElement v;
        for (const auto& [kp, cf] : A.comult(one(a))) {
            const BosonElement s =
                A.proj_pi(A.antipode(A.single(kp[1].deg, kp[1].idx, kp[1].grp)));
            for (const auto& [k2, c2] :
                 A.mul(A.single(kp[0].deg, kp[0].idx, kp[0].grp), s))
                acc(v, k2, cf * c2);
        }
        ok = ok && A.equal(v, A.proj_vartheta(one(a)));
    }
    rep.add("vartheta via antipode", ok);

    ok = true;
    for (const BKey& a : bs)
        for (int h = 0; h < G.order(); ++h) {
            ok = ok && A.equal(A.proj_vartheta(A.mul(one(a), A.group_elem(h))),
                               A.proj_vartheta(one(a)));
            const BosonElement lhs = A.proj_vartheta(A.mul(A.group_elem(h), one(a)));
            const BosonElement rhs = A.embed(a.deg, R.h_action(h, a.deg).col(a.idx), e);
            ok = ok && A.equal(lhs, rhs);
        }
    rep.add("vartheta multiplication rules", ok);

    ok = true;
    for (const BKey& a : bs) {
        BosonPair lhs;
        for (const auto& [kp, cf] : A.comult(one(a)))
            for (const auto& [k2, c2] :
                 A.proj_pi(A.single(kp[0].deg, kp[0].idx, kp[0].grp)))
                acc(lhs, std::array<BKey, 2>{k2, kp[1]}, cf * c2);
        BosonPair expect;
        const int gd = G.mul(R.basis_gdeg(a.deg, a.idx), a.grp);
        expect.emplace(std::array<BKey, 2>{BKey{0, 0, gd}, a}, cyc(1));
        ok = ok && A.equal(lhs, expect);
    }
    rep.add("group coaction reconstruction", ok);

    ok = true;
    for (int n = 0; n <= D; ++n)
        for (int i = 0; i < R.dim(n); ++i) {
            BosonPair lhs;
            for (const auto& [kp, cf] : A.comult(A.single(n, i, e)))
                for (const auto& [k2, c2] :
                     A.proj_pi(A.single(kp[1].deg, kp[1].idx, kp[1].grp)))
                    acc(lhs, std::array<BKey, 2>{kp[0], k2}, cf * c2);
            BosonPair expect;
            expect.emplace(std::array<BKey, 2>{BKey{n, i, e}, BKey{0, 0, e}}, cyc(1));
            ok = ok && A.equal(lhs, expect);
        }
    rep.add("subalgebra coinvariance", ok);

    ok = true;
    for (int n = 0; n <= D; ++n)
        for (int i = 0; i < R.dim(n); ++i) {
            BosonPair expect;
            for (int s = 0; s <= n; ++s) {
                const int b = n - s;
                const Mat C = R.comult(s, b);
                if (C.rows() == 0) continue;
                for (int p = 0; p < R.dim(s); ++p)
                    for (int q = 0; q < R.dim(b); ++q) {
                        const cyc& c = C(p * R.dim(b) + q, i);
                        if (!c.is_zero())
                            acc(expect, std::array<BKey, 2>{BKey{s, p, e}, BKey{b, q, e}}, c);
                    }
            }
            // braided comultiplication from the big one: r_1 piS(r_2) (x) r_3
            BosonPair lhs;
            for (const auto& [kt, cf] : A.comult2(A.single(n, i, e))) {
                const BosonElement m =
                    A.mul(A.single(kt[0].deg, kt[0].idx, kt[0].grp),
                          A.proj_pi(A.antipode(A.single(kt[1].deg, kt[1].idx, kt[1].grp))));
                for (const auto& [k2, c2] : m)
                    acc(lhs, std::array<BKey, 2>{k2, kt[2]}, cf * c2);
            }
            // and the short form: (vartheta (x) id) of the big comultiplication
            BosonPair lhs2;
            for (const auto& [kp, cf] : A.comult(A.single(n, i, e)))
                acc(lhs2,
                    std::array<BKey, 2>{BKey{kp[0].deg, kp[0].idx, e}, kp[1]}, cf);
            ok = ok && A.equal(lhs, expect) && A.equal(lhs2, expect);
        }
    rep.add("braided comultiplication reconstruction", ok);

    ok = true;
    for (int n = 0; n <= D; ++n)
        for (int i = 0; i < R.dim(n); ++i) {
            BosonElement lhs;
            for (const auto& [kp, cf] : A.comult(A.single(n, i, e))) {
                const BosonElement m =
                    A.mul(A.proj_pi(A.single(kp[0].deg, kp[0].idx, kp[0].grp)),
                          A.antipode(A.single(kp[1].deg, kp[1].idx, kp[1].grp)));
                for (const auto& [k2, c2] : m) acc(lhs, k2, cf * c2);
            }
            ok = ok && A.equal(lhs, A.embed(n, R.antipode(n).col(i), e));
        }
    rep.add("braided antipode reconstruction", ok);

    ok = true;
    for (int g = 0; g < G.order(); ++g)
        for (int n = 0; n <= D; ++n)
            for (int i = 0; i < R.dim(n); ++i)
                ok = ok && A.equal(A.h_adjoint(g, A.single(n, i, e)),
                                   A.embed(n, R.h_action(g, n).col(i), e));
    rep.add("adjoint action reconstruction", ok);

    ok = true;
    for (int n = 0; n <= D; ++n) {
        if (R.dim(n) == 0) continue;
        const Mat sq = R.antipode(n) * R.antipode(n) * R.theta(n);
        for (int i = 0; i < R.dim(n); ++i)
            ok = ok && A.equal(A.antipode(A.antipode(A.single(n, i, e))),
                               A.embed(n, sq.col(i), e));
    }
    rep.add("antipode square twist", ok);

    ok = true;
    for (int n = 0; n <= D; ++n)
        for (int i = 0; i < R.dim(n); ++i)
            ok = ok && A.equal(A.proj_vartheta(A.antipode_inv(A.single(n, i, e))),
                               A.embed(n, R.antipode_inv(n).col(i), e));
    rep.add("braided antipode inverse", ok);

    ok = true;
    for (int a = 1; a < D; ++a)
        for (int b = 1; a + b <= D; ++b) {
            const Mat lhs = R.antipode(a + b) * R.mult(a, b);
            const Mat rhs = R.mult(b, a) *
                            linalg::kron(R.antipode(b), R.antipode(a)) *
                            R.quotient_braiding(a, b);
            ok = ok && linalg::is_zero_mat(lhs - rhs);
        }
    rep.add("braided antipode antimultiplicative", ok);

    ok = true;
    for (int a = 1; a < D; ++a)
        for (int b = 1; a + b <= D; ++b) {
            const Mat lhs = R.comult(a, b) * R.antipode(a + b);
            const Mat rhs = linalg::kron(R.antipode(a), R.antipode(b)) *
                            R.quotient_braiding(b, a) * R.comult(b, a);
            ok = ok && linalg::is_zero_mat(lhs - rhs);
        }
    rep.add("braided antipode anticomultiplicative", ok);

    return rep;
}

CheckReport vartheta_identity_check(const Bosonization& A) {
    CheckReport rep;
    const FiniteGroup& G = A.group();
    const int D = A.cutoff();
    const std::vector<BKey> bs = A.basis();
    bool ok = true;
    for (const BKey& ka : bs)
        for (const BKey& kb : bs) {
            if (ka.deg + kb.deg > D) continue;
            const BosonElement a = A.single(ka.deg, ka.idx, ka.grp);
            const BosonElement b = A.single(kb.deg, kb.idx, kb.grp);

            BosonElement inner;
            for (const auto& [kp, cf] : A.comult(b)) {
                const BosonElement m =
                    A.mul(a,
                          A.proj_pi(A.antipode_inv(
                              A.single(kp[1].deg, kp[1].idx, kp[1].grp))),
                          A.single(kp[0].deg, kp[0].idx, kp[0].grp));
                for (const auto& [k2, c2] : m) acc(inner, k2, cf * c2);
            }
            const BosonElement lhs = A.proj_vartheta(A.antipode(inner));

            const BosonElement vsa = A.proj_vartheta(A.antipode(a));
            BosonElement rhs;
            for (const auto& [kt, cf] : A.comult2(b)) {
                const BosonElement p =
                    A.proj_pi(A.mul(A.antipode(A.single(kt[0].deg, kt[0].idx, kt[0].grp)),
                                    A.single(kt[2].deg, kt[2].idx, kt[2].grp)));
                BosonElement acted;
                for (const auto& [kg, cg] : p)
                    for (const auto& [k2, c2] : A.h_adjoint(kg.grp, vsa))
                        acc(acted, k2, cg * c2);
                const BosonElement vsb2 =
                    A.proj_vartheta(A.antipode(A.single(kt[1].deg, kt[1].idx, kt[1].grp)));
                for (const auto& [k2, c2] : A.mul(vsb2, acted)) acc(rhs, k2, cf * c2);
            }
            ok = ok && A.equal(lhs, rhs);
        }
    rep.add("projection-antipode exchange", ok);
    (void)G;
    return rep;
}

int CoinvariantModule::dim(int n) const {
    if (n < 0 || n > cutoff_) return 0;
    return (int)kbasis_[n].cols();
}

Mat CoinvariantModule::k_coords(int n, const Mat& cols) const {
    bool ok = true;
    Mat c = linalg::solve(kbasis_[n], cols, &ok);
    if (!ok) throw input_error("vector does not lie in the coinvariant subspace");
    return c;
}

Mat CoinvariantModule::flatten(int n, const Mat& col) const {
    Mat c = k_coords(n, col);
    Mat out = linalg::zero(total_, 1);
    for (int i = 0; i < c.rows(); ++i) out(offset_[n] + i, 0) = c(i, 0);
    return out;
}

CoinvariantModule coinvariants(const Bosonization& big, const Bosonization& target, int pivot) {
    const NicholsTruncation& RV = big.truncation();
    const NicholsTruncation& RN = target.truncation();
    const FiniteGroup& G = big.group();
    const int D = RV.cutoff();
    const YDModule& Vb = RV.base();
    const YDModule& Nb = RN.base();

    if (RN.cutoff() < D) throw input_error("quotient truncation cutoff too small");
    if (!RN.complete())
        throw not_defined_at_cutoff("quotient Nichols algebra not finite within the cutoff");

    std::vector<int> L;
    std::vector<int> comp = Vb.component.empty() ? std::vector<int>(Vb.dim(), 0) : Vb.component;
    for (int i = 0; i < Vb.dim(); ++i)
        if (comp[i] == pivot) L.push_back(i);
    const int dN = (int)L.size();
    if (Nb.dim() != dN) throw input_error("quotient letters do not match the pivot component");
    for (int k = 0; k < dN; ++k)
        if (Nb.degree[k] != Vb.degree[L[k]])
            throw input_error("quotient letters do not match the pivot component");
    for (int g = 0; g < G.order(); ++g)
        for (int k = 0; k < dN; ++k)
            for (int i = 0; i < Vb.dim(); ++i) {
                const bool in = std::binary_search(L.begin(), L.end(), i);
                const cyc& v = Vb.action[g](i, L[k]);
                if (!in && !v.is_zero())
                    throw input_error("pivot component is not stable under the group");
                if (in) {
                    const int row = (int)(std::lower_bound(L.begin(), L.end(), i) - L.begin());
                    if (!(Nb.action[g](row, k) == v))
                        throw input_error("quotient letters do not match the pivot component");
                }
            }

    CoinvariantModule K;
    K.big_ = &big;
    K.target_ = &target;
    K.pivot_ = pivot;
    K.cutoff_ = D;
    K.proj_.resize(D + 1);
    K.incl_.resize(D + 1);
    K.kbasis_.resize(D + 1);
    K.offset_.assign(D + 2, 0);

    const int dV = RV.letters();
    for (int n = 0; n <= D; ++n) {
        long nN = 1, nV = 1;
        for (int t = 0; t < n; ++t) {
            nN *= dN;
            nV *= dV;
        }
        Mat words = linalg::zero((int)nV, (int)nN);
        for (long t = 0; t < nN; ++t) {
            long w = 0, tt = t;
            std::vector<int> digits(n);
            for (int p = n - 1; p >= 0; --p) {
                digits[p] = (int)(tt % dN);
                tt /= dN;
            }
            for (int p = 0; p < n; ++p) w = w * dV + L[digits[p]];
            words((int)w, (int)t) = cyc(1);
        }
        K.incl_[n] = linalg::mul_sparse(RV.projection(n),
                                        linalg::mul_sparse(words, RN.section(n)));
        K.proj_[n] = linalg::mul_sparse(RN.projection(n),
                                        linalg::mul_sparse(Mat(words.transpose()), RV.section(n)));
        if (!linalg::is_zero_mat(linalg::mul_sparse(
                RN.projection(n),
                linalg::mul_sparse(Mat(words.transpose()), linalg::kernel(RV.symmetrizer(n))))))
            throw invalid_projection("projection does not descend to the quotient");
        if (!linalg::is_zero_mat(linalg::mul_sparse(
                RV.projection(n), linalg::mul_sparse(words, linalg::kernel(RN.symmetrizer(n))))))
            throw invalid_projection("inclusion does not descend to the quotient");
        if (RN.dim(n) > 0 &&
            !linalg::is_zero_mat(K.proj_[n] * K.incl_[n] - linalg::identity(RN.dim(n))))
            throw invalid_projection("quotient basis mismatch");
    }

    for (int n = 0; n <= D; ++n) {
        const int dn = RV.dim(n);
        if (n == 0) {
            K.kbasis_[0] = linalg::identity(1);
        } else if (dn == 0) {
            K.kbasis_[n] = linalg::zero(0, 0);
        } else {
            int rows = 0;
            for (int b = 1; b <= n; ++b) rows += RV.dim(n - b) * RN.dim(b);
            Mat C = linalg::zero(rows, dn);
            int at = 0;
            for (int b = 1; b <= n; ++b) {
                const int r = RV.dim(n - b) * RN.dim(b);
                if (r > 0)
                    C.middleRows(at, r) = linalg::mul_sparse(
                        linalg::kron(linalg::identity(RV.dim(n - b)), K.proj_[b]),
                        RV.comult(n - b, b));
                at += r;
            }
            std::map<std::pair<std::vector<int>, int>, std::vector<int>> blocks;
            for (int j = 0; j < dn; ++j)
                blocks[{RV.basis_multidegree(n, j), RV.basis_gdeg(n, j)}].push_back(j);
            std::vector<Mat> found;
            int kcols = 0;
            for (const auto& [key, cols] : blocks) {
                Mat Csub = linalg::zero(rows, (int)cols.size());
                for (int j = 0; j < (int)cols.size(); ++j) Csub.col(j) = C.col(cols[j]);
                Mat ker = linalg::kernel(Csub);
                if (ker.cols() == 0) continue;
                Mat full = linalg::zero(dn, (int)ker.cols());
                for (int j = 0; j < (int)cols.size(); ++j) full.row(cols[j]) = ker.row(j);
                found.push_back(full);
                kcols += (int)ker.cols();
            }
            Mat kb = linalg::zero(dn, kcols);
            int at2 = 0;
            for (const Mat& m : found) {
                kb.middleCols(at2, (int)m.cols()) = m;
                at2 += (int)m.cols();
            }
            K.kbasis_[n] = kb;
        }
        K.offset_[n + 1] = K.offset_[n] + K.dim(n);
    }
    K.total_ = K.offset_[D + 1];

    for (int n = 0; n <= D; ++n)
        for (int j = 0; j < K.dim(n); ++j) {
            int gd = G.id();
            std::vector<int> md((size_t)std::max(RV.components(), 1), 0);
            for (int r = 0; r < RV.dim(n); ++r)
                if (!K.kbasis_[n](r, j).is_zero()) {
                    gd = RV.basis_gdeg(n, r);
                    md = RV.basis_multidegree(n, r);
                    break;
                }
            int m = 0;
            for (int c = 0; c < (int)md.size(); ++c)
                if (c != pivot) m += md[c];
            K.zdeg_.push_back(n);
            K.mdeg_.push_back(m);
            K.gdeg_.push_back(gd);
        }

    const int Ntop = RN.top_degree();
    int ktop = 0;
    for (int n = 0; n <= D; ++n)
        if (K.dim(n) > 0) ktop = n;
    if (ktop + Ntop > D)
        throw not_defined_at_cutoff(
            "coinvariants do not close under the adjoint action within the cutoff");

    K.hact_.resize(G.order());
    for (int g = 0; g < G.order(); ++g) {
        Mat m = linalg::zero(K.total_, K.total_);
        for (int n = 0; n <= D; ++n) {
            if (K.dim(n) == 0) continue;
            Mat blk = K.k_coords(n, Mat(RV.h_action(g, n) * K.kbasis_[n]));
            m.block(K.offset_[n], K.offset_[n], K.dim(n), K.dim(n)) = blk;
        }
        K.hact_[g] = m;
    }

    const int eg = G.id();
    K.ract_.resize(Ntop + 1);
    K.ract_[0] = {linalg::identity(K.total_)};
    for (int d = 1; d <= Ntop; ++d) {
        K.ract_[d].resize(RN.dim(d));
        for (int b = 0; b < RN.dim(d); ++b) {
            Mat m = linalg::zero(K.total_, K.total_);
            const BosonElement a = big.embed(d, K.incl_[d].col(b), eg);
            const BosonPair da = big.comult(a);
            for (int n = 0; n + d <= D; ++n) {
                if (K.dim(n) == 0 || K.dim(n + d) == 0) continue;
                for (int j = 0; j < K.dim(n); ++j) {
                    const BosonElement x = big.embed(n, K.kbasis_[n].col(j), eg);
                    BosonElement adx;
                    for (const auto& [kp, cf] : da) {
                        const BosonElement t = big.mul(
                            big.single(kp[0].deg, kp[0].idx, kp[0].grp), x,
                            big.antipode(big.single(kp[1].deg, kp[1].idx, kp[1].grp)));
                        for (const auto& [k2, c2] : t) acc(adx, k2, cf * c2);
                    }
                    const Mat col = big.r_part(adx, n + d);
                    m.block(K.offset_[n + d], 0, K.dim(n + d), K.total_).col(K.offset_[n] + j) =
                        K.k_coords(n + d, col);
                }
            }
            K.ract_[d][b] = m;
        }
    }

    K.rcoact_.resize(Ntop + 1);
    K.rcoact_[0] = linalg::identity(K.total_);
    for (int d = 1; d <= Ntop; ++d) {
        Mat m = linalg::zero(RN.dim(d) * K.total_, K.total_);
        for (int n = d; n <= D; ++n) {
            if (K.dim(n) == 0 || K.dim(n - d) == 0) continue;
            const Mat comp = linalg::mul_sparse(
                linalg::kron(K.proj_[d], linalg::identity(RV.dim(n - d))), RV.comult(d, n - d));
            const Mat vals = comp * K.kbasis_[n];
            for (int j = 0; j < K.dim(n); ++j)
                for (int k = 0; k < RN.dim(d); ++k) {
                    Mat slice = linalg::zero(RV.dim(n - d), 1);
                    for (int y = 0; y < RV.dim(n - d); ++y)
                        slice(y, 0) = vals(k * RV.dim(n - d) + y, j);
                    const Mat c = K.k_coords(n - d, slice);
                    for (int y = 0; y < K.dim(n - d); ++y)
                        m(k * K.total_ + K.offset_[n - d] + y, K.offset_[n] + j) = c(y, 0);
                }
        }
        K.rcoact_[d] = m;
    }

    K.mult_ = linalg::zero(K.total_, K.total_ * K.total_);
    for (int na = 0; na <= D; ++na)
        for (int nb = 0; nb + na <= D; ++nb) {
            if (K.dim(na) == 0 || K.dim(nb) == 0 || K.dim(na + nb) == 0) continue;
            const Mat mv = RV.mult(na, nb);
            for (int p = 0; p < K.dim(na); ++p)
                for (int q = 0; q < K.dim(nb); ++q) {
                    const Mat w = linalg::kron(Mat(K.kbasis_[na].col(p)),
                                               Mat(K.kbasis_[nb].col(q)));
                    const Mat c = K.k_coords(na + nb, Mat(mv * w));
                    const int colix =
                        (K.offset_[na] + p) * K.total_ + (K.offset_[nb] + q);
                    for (int y = 0; y < K.dim(na + nb); ++y)
                        K.mult_(K.offset_[na + nb] + y, colix) = c(y, 0);
                }
        }

    K.comult_ = linalg::zero(K.total_ * K.total_, K.total_);
    for (int n = 0; n <= D; ++n) {
        if (K.dim(n) == 0) continue;
        for (int j = 0; j < K.dim(n); ++j) {
            const BosonElement x = big.embed(n, K.kbasis_[n].col(j), eg);
            // Delta_K(x) = x_1 pihat(S(x_2)) (x) x_3 with pihat keeping only
            // pivot letters in the braided part
            std::map<std::pair<int, int>, Mat> blocks;
            for (const auto& [kt, cf] : big.comult2(x)) {
                const BosonElement s2 =
                    big.antipode(big.single(kt[1].deg, kt[1].idx, kt[1].grp));
                BosonElement pih;
                for (const auto& [k2, c2] : s2) {
                    const Mat col = K.incl_[k2.deg] * (K.proj_[k2.deg] *
                                    Mat(linalg::identity(RV.dim(k2.deg)).col(k2.idx)));
                    for (const auto& [k3, c3] : big.embed(k2.deg, col, k2.grp))
                        acc(pih, k3, c2 * c3);
                }
                const BosonElement first =
                    big.mul(big.single(kt[0].deg, kt[0].idx, kt[0].grp), pih);
                if (kt[2].grp != eg)
                    throw input_error("coinvariant coproduct has a group part");
                for (const auto& [kf, vf] : first) {
                    if (kf.grp != eg)
                        throw input_error("coinvariant coproduct has a group part");
                    auto key = std::make_pair(kf.deg, kt[2].deg);
                    auto it = blocks.find(key);
                    if (it == blocks.end())
                        it = blocks
                                 .emplace(key, linalg::zero(RV.dim(kf.deg) * RV.dim(kt[2].deg), 1))
                                 .first;
                    it->second(kf.idx * RV.dim(kt[2].deg) + kt[2].idx, 0) += cf * vf;
                }
            }
            for (const auto& [key, vec] : blocks) {
                const int na = key.first, nb = key.second;
                if (linalg::is_zero_mat(vec)) continue;
                bool ok = true;
                const Mat c = linalg::solve(
                    linalg::kron(K.kbasis_[na], K.kbasis_[nb]), vec, &ok);
                if (!ok)
                    throw input_error("coinvariant coproduct leaves the subspace");
                for (int p = 0; p < K.dim(na); ++p)
                    for (int q = 0; q < K.dim(nb); ++q)
                        K.comult_((K.offset_[na] + p) * K.total_ + K.offset_[nb] + q,
                                  K.offset_[n] + j) += c(p * K.dim(nb) + q, 0);
            }
        }
    }

    return K;
}

}  // namespace ydn
