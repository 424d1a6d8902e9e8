#include "ydn/omega.hpp"

#include <cstdlib>
#include <string>

#include "ydn/errors.hpp"

namespace ydn {

namespace {

bool mat_eq(const Mat& a, const Mat& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && linalg::is_zero_mat(Mat(a - b));
}

Mat unit_col(int n, int i) {
    Mat e = linalg::zero(n, 1);
    e(i, 0) = cyc(1);
    return e;
}

}  // namespace

OmegaContext make_omega_context(const Bosonization& A, const Bosonization& Adual) {
    if (A.group_ptr() != Adual.group_ptr())
        throw input_error("the two bosonizations must share the group object");
    const NicholsTruncation& R = A.truncation();
    const NicholsTruncation& D = Adual.truncation();
    if (!R.complete() || !D.complete())
        throw not_defined_at_cutoff("transport needs complete truncations on both sides");
    if (R.top_degree() != D.top_degree())
        throw input_error("truncation top degrees do not match");
    for (int n = 0; n <= R.top_degree(); ++n)
        if (R.dim(n) != D.dim(n)) throw input_error("truncation dimensions do not match");

    GradedPairing P = canonical_pairing(D, R);
    OmegaContext ctx;
    ctx.A = &A;
    ctx.Adual = &Adual;
    for (int n = 0; n <= R.top_degree(); ++n) ctx.gram.push_back(P.gram(n));
    return ctx;
}

OmegaContext reverse_omega_context(const OmegaContext& ctx) {
    OmegaContext out;
    out.A = ctx.Adual;
    out.Adual = ctx.A;
    out.gram = inverse_pairing(ctx.gram, ctx.A->truncation());
    return out;
}

RelativeYDModule omega_object(const OmegaContext& ctx, const RelativeYDModule& X) {
    if (X.A != ctx.A) throw input_error("module does not live over the source bosonization");
    const NicholsTruncation& R = ctx.A->truncation();
    const NicholsTruncation& D = ctx.Adual->truncation();
    const int top = R.top_degree();
    const int N = X.dim();
    if ((int)X.act.size() != top + 1 || (int)X.coact.size() != top + 1)
        throw input_error("module depth does not match the truncation");
    if ((int)ctx.gram.size() <= top) throw input_error("context is missing gram matrices");

    RelativeYDModule Y;
    Y.A = ctx.Adual;
    Y.base = X.base;
    for (int z : X.zdeg) Y.zdeg.push_back(-z);
    Y.act.resize(top + 1);
    Y.act[0] = {linalg::identity(N)};
    Y.coact.push_back(linalg::identity(N));

    for (int d = 1; d <= top; ++d) {
        const int k = R.dim(d);
        const Mat& g = ctx.gram[d];
        if (linalg::rank(g) < k)
            throw pairing_degenerate("gram matrix singular in degree " + std::to_string(d));

        // Dual action: contract the coaction with the pairing.
        Y.act[d].assign((size_t)k, linalg::zero(N, N));
        for (int a = 0; a < k; ++a)
            for (int r = 0; r < k; ++r) {
                if (g(a, r).is_zero()) continue;
                Y.act[d][a] += g(a, r) * X.coact[d].middleRows(r * N, N);
            }

        // Dual coaction: solve the action operators against gram * theta,
        // then twist with the double braiding of R^dual(d) against the
        // underlying module.
        const Mat W = linalg::inverse(Mat(g * R.theta(d)));
        Mat T = linalg::zero(k * N, N);
        for (int a = 0; a < k; ++a) {
            Mat t = linalg::zero(N, N);
            for (int b = 0; b < k; ++b) {
                if (W(b, a).is_zero()) continue;
                t += W(b, a) * X.act[d][b];
            }
            T.middleRows(a * N, N) = t;
        }
        const YDModule Rd = degree_module(D, d);
        const Mat twist =
            linalg::mul_sparse(yd_braiding(X.base, Rd), yd_braiding(Rd, X.base));
        Y.coact.push_back(linalg::mul_sparse(twist, T));
    }

    CheckReport rep = validate_relative(Y);
    if (!rep.all_ok()) throw omega_inconsistent(rep.failures());
    return Y;
}

Mat omega_mu(const OmegaContext& ctx, const RelativeYDModule& M, const RelativeYDModule& N) {
    if (M.A != ctx.A || N.A != ctx.A)
        throw input_error("tensor factors do not live over the source bosonization");
    const NicholsTruncation& R = ctx.A->truncation();
    const int nm = M.dim(), nn = N.dim();
    const int e = ctx.A->group().id();
    Mat out = linalg::zero(nm * nn, nm * nn);
    for (int d = 0; d <= N.depth(); ++d) {
        const Mat& co = N.coact[d];
        if (linalg::is_zero_mat(co)) continue;
        const Mat& sr = R.antipode(d);
        for (int r = 0; r < R.dim(d); ++r) {
            const Mat op =
                rel_act_element(M, ctx.A->antipode_inv(ctx.A->embed(d, sr.col(r), e)));
            for (int i2 = 0; i2 < nm; ++i2)
                for (int i = 0; i < nm; ++i) {
                    if (op(i2, i).is_zero()) continue;
                    for (int j2 = 0; j2 < nn; ++j2)
                        for (int j = 0; j < nn; ++j) {
                            const cyc& cf = co(r * nn + j2, j);
                            if (cf.is_zero()) continue;
                            out(i2 * nn + j2, i * nn + j) += op(i2, i) * cf;
                        }
                }
        }
    }
    return out;
}

BraidedBialgebra bialgebra_from_coinvariants(const CoinvariantModule& K) {
    BraidedBialgebra B;
    B.carrier = rel_from_coinvariants(K);
    B.mult = K.mult();
    B.comult = K.comult();
    B.unit = 0;
    B.window = K.cutoff();
    return B;
}

CheckReport braided_bialgebra_suite(const BraidedBialgebra& B) {
    CheckReport rep;
    const RelativeYDModule& X = B.carrier;
    const int T = X.dim();
    const int u = B.unit;
    auto zd = [&](int i) { return X.zdeg.empty() ? 0 : std::abs(X.zdeg[(size_t)i]); };
    auto inwin = [&](int s) { return B.window < 0 || s <= B.window; };

    bool ok = B.mult.rows() == T && B.mult.cols() == T * T && B.comult.rows() == T * T &&
              B.comult.cols() == T && u >= 0 && u < T;
    rep.add("structure shape", ok);
    if (!ok) return rep;

    ok = true;
    for (int j = 0; j < T; ++j) {
        const Mat ej = unit_col(T, j);
        ok = ok && mat_eq(B.mult.col(u * T + j), ej) && mat_eq(B.mult.col(j * T + u), ej);
    }
    rep.add("unit", ok);

    // The counit is the coefficient of the unit basis vector.
    ok = true;
    for (int j = 0; j < T && ok; ++j)
        for (int i = 0; i < T && ok; ++i) {
            const cyc want = i == j ? cyc(1) : cyc(0);
            ok = B.comult(u * T + i, j) == want && B.comult(i * T + u, j) == want;
        }
    rep.add("counit", ok);

    ok = mat_eq(B.comult.col(u), unit_col(T * T, u * T + u));
    for (int a = 0; a < T && ok; ++a)
        for (int b = 0; b < T && ok; ++b) {
            if (!inwin(zd(a) + zd(b))) continue;
            const cyc want = a == u && b == u ? cyc(1) : cyc(0);
            ok = B.mult(u, a * T + b) == want;
        }
    rep.add("unit grouplike and counit multiplicative", ok);

    ok = true;
    for (int i = 0; i < T && ok; ++i)
        for (int j = 0; j < T && ok; ++j)
            for (int k = 0; k < T && ok; ++k) {
                if (!inwin(zd(i) + zd(j) + zd(k))) continue;
                Mat lhs = linalg::zero(T, 1), rhs = linalg::zero(T, 1);
                const Mat mij = B.mult.col(i * T + j), mjk = B.mult.col(j * T + k);
                for (int p = 0; p < T; ++p) {
                    if (!mij(p, 0).is_zero()) lhs += mij(p, 0) * B.mult.col(p * T + k);
                    if (!mjk(p, 0).is_zero()) rhs += mjk(p, 0) * B.mult.col(i * T + p);
                }
                ok = mat_eq(lhs, rhs);
            }
    rep.add("multiplication associative", ok);

    ok = true;
    for (int j = 0; j < T && ok; ++j) {
        const Mat w = B.comult.col(j);
        Mat lhs = linalg::zero(T * T * T, 1), rhs = linalg::zero(T * T * T, 1);
        for (int p = 0; p < T; ++p)
            for (int q = 0; q < T; ++q) {
                const cyc& cf = w(p * T + q, 0);
                if (cf.is_zero()) continue;
                const Mat dp = B.comult.col(p), dq = B.comult.col(q);
                for (int s = 0; s < T * T; ++s) {
                    if (!dp(s, 0).is_zero()) lhs(s * T + q, 0) += cf * dp(s, 0);
                    if (!dq(s, 0).is_zero()) rhs(p * T * T + s, 0) += cf * dq(s, 0);
                }
            }
        ok = mat_eq(lhs, rhs);
    }
    rep.add("comultiplication coassociative", ok);

    const Mat c = rel_braiding(X, X);
    ok = true;
    for (int a = 0; a < T && ok; ++a)
        for (int b = 0; b < T && ok; ++b) {
            if (!inwin(zd(a) + zd(b))) continue;
            const Mat lhs = B.comult * B.mult.col(a * T + b);
            Mat rhs = linalg::zero(T * T, 1);
            const Mat da = B.comult.col(a), db = B.comult.col(b);
            for (int p = 0; p < T; ++p)
                for (int q = 0; q < T; ++q) {
                    const cyc& ca = da(p * T + q, 0);
                    if (ca.is_zero()) continue;
                    for (int r = 0; r < T; ++r)
                        for (int s = 0; s < T; ++s) {
                            const cyc& cb = db(r * T + s, 0);
                            if (cb.is_zero()) continue;
                            const Mat br = c.col(q * T + r);
                            for (int t = 0; t < T * T; ++t) {
                                if (br(t, 0).is_zero()) continue;
                                const int r2 = t / T, q2 = t % T;
                                const cyc f = ca * cb * br(t, 0);
                                const Mat m1 = B.mult.col(p * T + r2);
                                const Mat m2 = B.mult.col(q2 * T + s);
                                for (int x = 0; x < T; ++x) {
                                    if (m1(x, 0).is_zero()) continue;
                                    for (int y = 0; y < T; ++y) {
                                        if (m2(y, 0).is_zero()) continue;
                                        rhs(x * T + y, 0) += f * m1(x, 0) * m2(y, 0);
                                    }
                                }
                            }
                        }
                }
            ok = mat_eq(lhs, rhs);
        }
    rep.add("comultiplication multiplicative", ok);
    return rep;
}

BraidedBialgebra transport_bialgebra(const OmegaContext& ctx, const BraidedBialgebra& B) {
    const Mat om = omega_mu(ctx, B.carrier, B.carrier);
    BraidedBialgebra out;
    out.carrier = omega_object(ctx, B.carrier);
    out.mult = linalg::mul_sparse(B.mult, om);
    out.comult = linalg::mul_sparse(linalg::inverse(om), B.comult);
    out.unit = B.unit;
    out.window = B.window;
    CheckReport rep = braided_bialgebra_suite(out);
    if (!rep.all_ok()) throw transport_inconsistent(rep.failures());
    return out;
}

CheckReport verify_braided_monoidal(const OmegaContext& ctx,
                                    const std::vector<const RelativeYDModule*>& samples,
                                    const std::vector<RelMorphism>& morphisms) {
    CheckReport rep;
    const int n = (int)samples.size();

    std::vector<RelativeYDModule> images;
    images.reserve(samples.size());
    for (const auto* m : samples) images.push_back(omega_object(ctx, *m));

    const RelativeYDModule triv = rel_trivial(*ctx.A);
    bool ok = true;
    for (const auto* m : samples) {
        ok = ok && mat_eq(omega_mu(ctx, triv, *m), linalg::identity(m->dim()));
        ok = ok && mat_eq(omega_mu(ctx, *m, triv), linalg::identity(m->dim()));
    }
    rep.add("unit constraints", ok);

    ok = true;
    for (const auto& f : morphisms)
        for (const auto* m : samples) {
            const Mat lf = linalg::kron(f.map, linalg::identity(m->dim()));
            ok = ok && mat_eq(Mat(omega_mu(ctx, *f.cod, *m) * lf),
                              Mat(lf * omega_mu(ctx, *f.dom, *m)));
            const Mat rf = linalg::kron(linalg::identity(m->dim()), f.map);
            ok = ok && mat_eq(Mat(omega_mu(ctx, *m, *f.cod) * rf),
                              Mat(rf * omega_mu(ctx, *m, *f.dom)));
        }
    rep.add("naturality", ok);

    ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Mat lhs =
                linalg::mul_sparse(rel_braiding(*samples[i], *samples[j]),
                                   omega_mu(ctx, *samples[i], *samples[j]));
            const Mat rhs = linalg::mul_sparse(omega_mu(ctx, *samples[j], *samples[i]),
                                               rel_braiding(images[i], images[j]));
            ok = ok && mat_eq(lhs, rhs);
        }
    rep.add("braiding intertwined", ok);

    ok = true;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n && ok; ++k) {
                const RelativeYDModule mn = rel_tensor(*samples[i], *samples[j]);
                const RelativeYDModule np = rel_tensor(*samples[j], *samples[k]);
                const Mat lhs = linalg::mul_sparse(
                    omega_mu(ctx, mn, *samples[k]),
                    linalg::kron(omega_mu(ctx, *samples[i], *samples[j]),
                                 linalg::identity(samples[k]->dim())));
                const Mat rhs = linalg::mul_sparse(
                    omega_mu(ctx, *samples[i], np),
                    linalg::kron(linalg::identity(samples[i]->dim()),
                                 omega_mu(ctx, *samples[j], *samples[k])));
                ok = mat_eq(lhs, rhs);
            }
    rep.add("tensor coherence", ok);

    ok = true;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
            const Mat om = omega_mu(ctx, *samples[i], *samples[j]);
            const RelativeYDModule lhsm = rel_tensor(images[i], images[j]);
            const RelativeYDModule rhsm =
                omega_object(ctx, rel_tensor(*samples[i], *samples[j]));
            for (int r = 0; r < om.rows() && ok; ++r)
                for (int cidx = 0; cidx < om.cols() && ok; ++cidx)
                    if (!om(r, cidx).is_zero())
                        ok = rhsm.base.degree[(size_t)r] == lhsm.base.degree[(size_t)cidx];
            for (int g = 0; g < ctx.A->group().order() && ok; ++g)
                ok = mat_eq(Mat(om * lhsm.base.action[(size_t)g]),
                            Mat(rhsm.base.action[(size_t)g] * om));
            for (int d = 1; d <= lhsm.depth() && ok; ++d) {
                for (size_t b = 0; b < lhsm.act[(size_t)d].size() && ok; ++b)
                    ok = mat_eq(Mat(om * lhsm.act[(size_t)d][b]),
                                Mat(rhsm.act[(size_t)d][b] * om));
                const int k = ctx.Adual->truncation().dim(d);
                ok = ok && mat_eq(Mat(linalg::kron(linalg::identity(k), om) *
                                      lhsm.coact[(size_t)d]),
                                  Mat(rhsm.coact[(size_t)d] * om));
            }
        }
    rep.add("comparison is a module morphism", ok);
    return rep;
}

CheckReport omega_object_checks(const OmegaContext& ctx, const RelativeYDModule& X) {
    CheckReport rep;
    const RelativeYDModule Y = omega_object(ctx, X);
    const int top = ctx.A->truncation().top_degree();

    bool ok = Y.base.degree == X.base.degree && Y.base.component == X.base.component;
    for (size_t g = 0; g < X.base.action.size() && ok; ++g)
        ok = mat_eq(Y.base.action[g], X.base.action[g]);
    rep.add("underlying group structure fixed", ok);

    ok = Y.zdeg.size() == X.zdeg.size();
    for (size_t i = 0; i < X.zdeg.size() && ok; ++i) ok = Y.zdeg[i] == -X.zdeg[i];
    rep.add("grading negated", ok);

    rep.add("image validates", validate_relative(Y).all_ok());

    ok = true;
    for (int m = 0; m <= top; ++m) {
        ok = ok && linalg::same_col_span(rel_fdelta(Y, m), rel_fmu(X, m));
        ok = ok && linalg::same_col_span(rel_fmu(Y, m), rel_fdelta(X, m));
    }
    rep.add("filtration swap", ok);

    // Round trip. The action side: for every degree d and basis word r,
    // acting by the antipode image S(x_r # e) on X must equal contracting
    // the image's coaction leg xi_a # gamma against x_r through the
    // reversed pairing, after gamma^{-1} and the inverse antipode are
    // applied to the leg. The gamma tag is the group degree of the
    // basis vector the coaction lands on. The coaction side inverts the
    // gram contraction that defines the image's action.
    const OmegaContext rctx = reverse_omega_context(ctx);
    const NicholsTruncation& R = ctx.A->truncation();
    const NicholsTruncation& D = ctx.Adual->truncation();
    const FiniteGroup& G = ctx.A->group();
    const int N = X.dim();
    ok = true;
    for (int d = 1; d <= top && ok; ++d) {
        const int k = R.dim(d);
        if (k == 0) continue;
        std::vector<Mat> coeff;  // per group element: pairing of the leg
        coeff.reserve((size_t)G.order());
        for (int g = 0; g < G.order(); ++g)
            coeff.push_back(
                Mat(rctx.gram[d] * D.h_action(G.inv(g), d) * D.antipode_inv(d)));
        for (int r = 0; r < k && ok; ++r) {
            const Mat lhs =
                rel_act_element(X, ctx.A->antipode(ctx.A->embed(d, unit_col(k, r), G.id())));
            Mat rhs = linalg::zero(N, N);
            for (int i = 0; i < N; ++i) {
                const Mat& ci = coeff[(size_t)X.base.degree[(size_t)i]];
                for (int a = 0; a < k; ++a) {
                    if (ci(r, a).is_zero()) continue;
                    rhs.row(i) += ci(r, a) * Y.coact[(size_t)d].row(a * N + i);
                }
            }
            ok = mat_eq(lhs, rhs);
        }
        const Mat ginv = linalg::inverse(ctx.gram[d]);
        Mat rec = linalg::zero(k * N, N);
        for (int r = 0; r < k; ++r)
            for (int a = 0; a < k; ++a) {
                if (ginv(r, a).is_zero()) continue;
                rec.middleRows(r * N, N) += ginv(r, a) * Y.act[(size_t)d][(size_t)a];
            }
        ok = ok && mat_eq(rec, X.coact[(size_t)d]);
    }
    rep.add("round trip", ok);
    return rep;
}

}  // namespace ydn
