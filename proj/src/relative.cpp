#include "ydn/relative.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace ydn {

namespace {

using AX = std::map<std::pair<BKey, int>, cyc>;

void add_ax(AX& out, const BKey& k, int x, const cyc& cf) {
    if (cf.is_zero()) return;
    auto it = out.find({k, x});
    if (it == out.end()) {
        out.emplace(std::make_pair(k, x), cf);
        return;
    }
    it->second += cf;
    if (it->second.is_zero()) out.erase(it);
}

/// Full A-coaction of basis vector i, with the group degree of the X-leg
/// tagged onto the R-leg.
AX full_coaction(const RelativeYDModule& X, int i) {
    AX out;
    const int N = X.dim();
    for (int d = 0; d < (int)X.coact.size(); ++d) {
        const int dr = (int)X.coact[d].rows() / N;
        for (int r = 0; r < dr; ++r)
            for (int j = 0; j < N; ++j)
                add_ax(out, BKey{d, r, X.base.degree[j]}, j, X.coact[d](r * N + j, i));
    }
    return out;
}

}  // namespace

RelativeYDModule rel_from_coinvariants(const CoinvariantModule& K) {
    RelativeYDModule X;
    X.A = &K.target();
    const Bosonization& A = K.target();
    const NicholsTruncation& R = A.truncation();
    const int T = K.total_dim();
    X.base.G = A.group_ptr();
    for (int i = 0; i < T; ++i) {
        X.base.degree.push_back(K.gdeg(i));
        X.zdeg.push_back(K.zdeg(i));
    }
    for (int g = 0; g < A.group().order(); ++g) X.base.action.push_back(K.h_action(g));
    const int top = R.top_degree();
    X.act.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        for (int b = 0; b < R.dim(d); ++b) X.act[d].push_back(K.r_action(d, b));
        X.coact.push_back(K.r_coaction(d));
    }
    return X;
}

RelativeYDModule rel_trivial(const Bosonization& A) {
    RelativeYDModule X;
    X.A = &A;
    X.base.G = A.group_ptr();
    X.base.degree = {A.group().id()};
    X.base.action.assign((size_t)A.group().order(), linalg::identity(1));
    const int top = A.truncation().top_degree();
    X.act.resize(top + 1);
    X.act[0] = {linalg::identity(1)};
    X.coact.push_back(linalg::identity(1));
    for (int d = 1; d <= top; ++d) {
        X.act[d].assign((size_t)A.truncation().dim(d), linalg::zero(1, 1));
        X.coact.push_back(linalg::zero(A.truncation().dim(d), 1));
    }
    X.zdeg = {0};
    return X;
}

Mat rel_act_element(const RelativeYDModule& X, const BosonElement& a) {
    Mat out = linalg::zero(X.dim(), X.dim());
    for (const auto& [k, cf] : a) {
        if (k.deg >= (int)X.act.size()) {
            if (!cf.is_zero()) throw input_error("element degree exceeds the stored action");
            continue;
        }
        out += cf * Mat(X.act[k.deg][k.idx] * X.base.action[k.grp]);
    }
    return out;
}

CheckReport validate_relative(const RelativeYDModule& X) {
    CheckReport rep;
    const Bosonization& A = *X.A;
    const NicholsTruncation& R = A.truncation();
    const FiniteGroup& G = A.group();
    const int N = X.dim();
    const int top = R.top_degree();

    bool ok = R.complete() && X.base.G && X.base.G->order() == G.order();
    if (ok) {
        try {
            yd_validate(X.base);
        } catch (const not_a_yd_module&) {
            ok = false;
        }
    }
    rep.add("group module", ok);
    if (!ok) return rep;

    ok = (int)X.act.size() == top + 1 && (int)X.coact.size() == top + 1 &&
         X.act[0].size() == 1 && linalg::is_zero_mat(X.act[0][0] - linalg::identity(N)) &&
         linalg::is_zero_mat(X.coact[0] - linalg::identity(N)) &&
         (X.zdeg.empty() || (int)X.zdeg.size() == N);
    for (int d = 1; d <= top && ok; ++d)
        ok = (int)X.act[d].size() == R.dim(d) && X.coact[d].rows() == R.dim(d) * N &&
             X.coact[d].cols() == N;
    rep.add("structure shape", ok);
    if (!ok) return rep;

    ok = true;
    for (int d1 = 1; d1 <= top; ++d1)
        for (int d2 = 1; d2 <= top; ++d2) {
            const int d = d1 + d2;
            const Mat C = d <= top ? R.mult(d1, d2) : Mat();
            for (int a = 0; a < R.dim(d1); ++a)
                for (int b = 0; b < R.dim(d2); ++b) {
                    Mat rhs = linalg::zero(N, N);
                    if (d <= top)
                        for (int k = 0; k < R.dim(d); ++k) {
                            const cyc& c = C(k, a * R.dim(d2) + b);
                            if (!c.is_zero()) rhs += c * X.act[d][k];
                        }
                    ok = ok && linalg::is_zero_mat(Mat(X.act[d1][a] * X.act[d2][b]) - rhs);
                }
        }
    rep.add("action multiplicativity", ok);

    ok = true;
    for (int g = 0; g < G.order(); ++g)
        for (int d = 1; d <= top; ++d) {
            const Mat hr = R.h_action(g, d);
            for (int b = 0; b < R.dim(d); ++b) {
                Mat lhs = X.base.action[g] * X.act[d][b] * X.base.action[G.inv(g)];
                Mat rhs = linalg::zero(N, N);
                for (int b2 = 0; b2 < R.dim(d); ++b2)
                    if (!hr(b2, b).is_zero()) rhs += hr(b2, b) * X.act[d][b2];
                ok = ok && linalg::is_zero_mat(lhs - rhs);
            }
        }
    rep.add("smash commutation", ok);

    ok = true;
    for (int d1 = 1; d1 <= top; ++d1)
        for (int d2 = 1; d2 <= top; ++d2) {
            const Mat rhs =
                linalg::mul_sparse(linalg::kron(linalg::identity(R.dim(d1)), X.coact[d2]),
                                   X.coact[d1]);
            if (d1 + d2 <= top) {
                const Mat lhs = linalg::mul_sparse(
                    linalg::kron(R.comult(d1, d2), linalg::identity(N)), X.coact[d1 + d2]);
                ok = ok && linalg::is_zero_mat(lhs - rhs);
            } else {
                ok = ok && linalg::is_zero_mat(rhs);
            }
        }
    rep.add("comodule coassociativity", ok);

    ok = true;
    for (int d = 1; d <= top; ++d)
        for (int r = 0; r < R.dim(d); ++r)
            for (int j = 0; j < N; ++j)
                for (int i = 0; i < N; ++i)
                    if (!X.coact[d](r * N + j, i).is_zero())
                        ok = ok && X.base.degree[i] ==
                                       G.mul(R.basis_gdeg(d, r), X.base.degree[j]);
    rep.add("group colinearity", ok);

    ok = true;
    if (!X.zdeg.empty()) {
        for (int g = 0; g < G.order() && ok; ++g)
            for (int j = 0; j < N; ++j)
                for (int i = 0; i < N; ++i)
                    if (!X.base.action[g](j, i).is_zero()) ok = ok && X.zdeg[j] == X.zdeg[i];
        for (int d = 1; d <= top; ++d)
            for (int b = 0; b < R.dim(d); ++b)
                for (int j = 0; j < N; ++j)
                    for (int i = 0; i < N; ++i)
                        if (!X.act[d][b](j, i).is_zero()) ok = ok && X.zdeg[j] == X.zdeg[i] + d;
        for (int d = 1; d <= top; ++d)
            for (int r = 0; r < R.dim(d); ++r)
                for (int j = 0; j < N; ++j)
                    for (int i = 0; i < N; ++i)
                        if (!X.coact[d](r * N + j, i).is_zero())
                            ok = ok && X.zdeg[j] == X.zdeg[i] - d;
    }
    rep.add("grading compatibility", ok);

    ok = true;
    for (int g = 0; g < G.order(); ++g)
        for (int d = 1; d <= top; ++d)
            ok = ok && linalg::is_zero_mat(
                           Mat(linalg::kron(R.h_action(g, d), X.base.action[g]) * X.coact[d]) -
                           Mat(X.coact[d] * X.base.action[g]));
    rep.add("compatibility on group generators", ok);

    ok = true;
    const int e = G.id();
    for (int b = 0; b < R.dim(1); ++b) {
        const int gb = R.basis_gdeg(1, b);
        const BosonElement x = A.single(1, b, e);
        const BosonElement sx = A.antipode(x);
        for (int i = 0; i < N; ++i) {
            AX lhs;
            for (int j = 0; j < N; ++j) {
                const cyc& c = X.act[1][b](j, i);
                if (c.is_zero()) continue;
                for (const auto& [kj, cf] : full_coaction(X, j)) add_ax(lhs, kj.first, kj.second, c * cf);
            }
            AX rhs;
            for (const auto& [kj, cf] : full_coaction(X, i)) {
                const BosonElement m1 = A.single(kj.first.deg, kj.first.idx, kj.first.grp);
                for (const auto& [k2, c2] : A.mul(x, m1)) add_ax(rhs, k2, kj.second, cf * c2);
                const BosonElement gm1 = A.mul(A.group_elem(gb), m1);
                for (int j2 = 0; j2 < N; ++j2) {
                    const cyc& aj = X.act[1][b](j2, kj.second);
                    if (!aj.is_zero())
                        for (const auto& [k2, c2] : gm1) add_ax(rhs, k2, j2, cf * c2 * aj);
                }
                const BosonElement m3 = A.mul(gm1, sx);
                for (int j2 = 0; j2 < N; ++j2) {
                    const cyc& hj = X.base.action[gb](j2, kj.second);
                    if (!hj.is_zero())
                        for (const auto& [k2, c2] : m3) add_ax(rhs, k2, j2, cf * c2 * hj);
                }
            }
            ok = ok && lhs == rhs;
        }
    }
    rep.add("compatibility on letter generators", ok);

    return rep;
}

RelativeYDModule rel_tensor(const RelativeYDModule& X, const RelativeYDModule& Y) {
    if (X.A != Y.A) throw input_error("tensor factors live over different bosonizations");
    const Bosonization& A = *X.A;
    const NicholsTruncation& R = A.truncation();
    const int top = R.top_degree();
    const int nx = X.dim(), ny = Y.dim();

    RelativeYDModule T;
    T.A = X.A;
    T.base = yd_tensor(X.base, Y.base);
    T.act.resize(top + 1);
    for (int d = 0; d <= top; ++d)
        for (int b = 0; b < R.dim(d); ++b) {
            Mat m = linalg::zero(nx * ny, nx * ny);
            for (int d1 = 0; d1 <= d; ++d1) {
                const int d2 = d - d1;
                const Mat C = R.comult(d1, d2);
                for (int p = 0; p < R.dim(d1); ++p)
                    for (int q = 0; q < R.dim(d2); ++q) {
                        const cyc& c = C(p * R.dim(d2) + q, b);
                        if (c.is_zero()) continue;
                        const Mat xa =
                            X.act[d1][p] * X.base.action[R.basis_gdeg(d2, q)];
                        m += c * linalg::kron(xa, Y.act[d2][q]);
                    }
            }
            T.act[d].push_back(m);
        }

    for (int d = 0; d <= top; ++d) {
        Mat m = linalg::zero(R.dim(d) * nx * ny, nx * ny);
        for (int d1 = 0; d1 <= d; ++d1) {
            const int d2 = d - d1;
            for (int i = 0; i < nx; ++i)
                for (int r = 0; r < R.dim(d1); ++r)
                    for (int i2 = 0; i2 < nx; ++i2) {
                        const cyc& cx = X.coact[d1](r * nx + i2, i);
                        if (cx.is_zero()) continue;
                        const BosonElement m1 =
                            A.single(d1, r, X.base.degree[i2]);
                        for (int j = 0; j < ny; ++j)
                            for (int u = 0; u < R.dim(d2); ++u)
                                for (int j2 = 0; j2 < ny; ++j2) {
                                    const cyc& cy = Y.coact[d2](u * ny + j2, j);
                                    if (cy.is_zero()) continue;
                                    const BosonElement prod = A.mul(
                                        m1, A.single(d2, u, Y.base.degree[j2]));
                                    for (const auto& [k, ck] : prod)
                                        m(k.idx * nx * ny + i2 * ny + j2, i * ny + j) +=
                                            cx * cy * ck;
                                }
                    }
        }
        T.coact.push_back(m);
    }

    if (!X.zdeg.empty() && !Y.zdeg.empty())
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) T.zdeg.push_back(X.zdeg[i] + Y.zdeg[j]);
    return T;
}

Mat rel_braiding(const RelativeYDModule& X, const RelativeYDModule& Y) {
    if (X.A != Y.A) throw input_error("braiding factors live over different bosonizations");
    const int nx = X.dim(), ny = Y.dim();
    Mat c = linalg::zero(ny * nx, nx * ny);
    for (int d = 0; d < (int)X.coact.size(); ++d) {
        const int dr = (int)X.coact[d].rows() / nx;
        for (int r = 0; r < dr; ++r)
            for (int i2 = 0; i2 < nx; ++i2) {
                Mat op;
                bool have = false;
                for (int i = 0; i < nx; ++i) {
                    const cyc& v = X.coact[d](r * nx + i2, i);
                    if (v.is_zero()) continue;
                    if (!have) {
                        op = Y.act[d][r] * Y.base.action[X.base.degree[i2]];
                        have = true;
                    }
                    for (int j2 = 0; j2 < ny; ++j2)
                        for (int j = 0; j < ny; ++j) {
                            const cyc& o = op(j2, j);
                            if (!o.is_zero()) c(j2 * nx + i2, i * ny + j) += v * o;
                        }
                }
            }
    }
    return c;
}

RelSubmodule rel_submodule(const RelativeYDModule& X, const Mat& span) {
    const int N = X.dim();
    const Mat B = linalg::col_space_basis(span);
    std::map<std::pair<int, int>, std::vector<int>> labels;
    for (int i = 0; i < N; ++i)
        labels[{X.zdeg.empty() ? 0 : X.zdeg[i], X.base.degree[i]}].push_back(i);

    std::vector<Mat> parts;
    std::vector<std::pair<int, int>> part_labels;
    int total = 0;
    for (const auto& [lab, rows] : labels) {
        Mat U = linalg::zero(N, (int)rows.size());
        for (int k = 0; k < (int)rows.size(); ++k) U(rows[k], k) = cyc(1);
        Mat inter = linalg::span_intersection(B, U);
        if (inter.cols() == 0) continue;
        parts.push_back(inter);
        part_labels.push_back(lab);
        total += (int)inter.cols();
    }
    if (total != (int)B.cols()) throw input_error("subspace is not homogeneous");

    Mat incl = linalg::zero(N, total);
    RelSubmodule out;
    out.module.A = X.A;
    out.module.base.G = X.base.G;
    int at = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
        incl.middleCols(at, (int)parts[p].cols()) = parts[p];
        for (int k = 0; k < (int)parts[p].cols(); ++k) {
            out.module.base.degree.push_back(part_labels[p].second);
            if (!X.zdeg.empty()) out.module.zdeg.push_back(part_labels[p].first);
        }
        at += (int)parts[p].cols();
    }

    auto coords = [&](const Mat& lift, const Mat& vecs) {
        bool ok = true;
        Mat c = linalg::solve(lift, vecs, &ok);
        if (!ok) throw input_error("subspace is not stable under the structure maps");
        return c;
    };
    for (int g = 0; g < (int)X.base.action.size(); ++g)
        out.module.base.action.push_back(coords(incl, Mat(X.base.action[g] * incl)));
    out.module.act.resize(X.act.size());
    for (int d = 0; d < (int)X.act.size(); ++d)
        for (const Mat& a : X.act[d]) out.module.act[d].push_back(coords(incl, Mat(a * incl)));
    for (int d = 0; d < (int)X.coact.size(); ++d) {
        const int dr = (int)X.coact[d].rows() / N;
        out.module.coact.push_back(
            coords(linalg::kron(linalg::identity(dr), incl), Mat(X.coact[d] * incl)));
    }
    out.inclusion = incl;
    return out;
}

Mat adjoint_orbit(const RelativeYDModule& X, const Mat& seed) {
    Mat cur = linalg::col_space_basis(seed);
    for (;;) {
        std::vector<Mat> imgs = {cur};
        int cols = (int)cur.cols();
        for (int d = 1; d < (int)X.act.size(); ++d)
            for (const Mat& a : X.act[d]) {
                imgs.push_back(a * cur);
                cols += (int)cur.cols();
            }
        Mat all = linalg::zero(X.dim(), cols);
        int at = 0;
        for (const Mat& m : imgs) {
            all.middleCols(at, (int)m.cols()) = m;
            at += (int)m.cols();
        }
        Mat next = linalg::col_space_basis(all);
        if (next.cols() == cur.cols()) return next;
        cur = next;
    }
}

Mat rel_fdelta(const RelativeYDModule& X, int n) {
    const int N = X.dim();
    int rows = 0;
    for (int d = n + 1; d < (int)X.coact.size(); ++d) rows += (int)X.coact[d].rows();
    if (rows == 0) return linalg::identity(N);
    Mat stacked = linalg::zero(rows, N);
    int at = 0;
    for (int d = n + 1; d < (int)X.coact.size(); ++d) {
        stacked.middleRows(at, (int)X.coact[d].rows()) = X.coact[d];
        at += (int)X.coact[d].rows();
    }
    return linalg::kernel(stacked);
}

Mat rel_fmu(const RelativeYDModule& X, int n) {
    const int N = X.dim();
    std::vector<const Mat*> ops;
    for (int d = n + 1; d < (int)X.act.size(); ++d)
        for (const Mat& a : X.act[d]) ops.push_back(&a);
    if (ops.empty()) return linalg::identity(N);
    Mat stacked = linalg::zero((int)ops.size() * N, N);
    for (size_t k = 0; k < ops.size(); ++k) stacked.middleRows((int)k * N, N) = *ops[k];
    return linalg::kernel(stacked);
}

Mat zdeg_component(const RelativeYDModule& X, int z) {
    if (X.zdeg.empty()) throw input_error("module carries no grading");
    std::vector<int> idx;
    for (int i = 0; i < X.dim(); ++i)
        if (X.zdeg[i] == z) idx.push_back(i);
    Mat out = linalg::zero(X.dim(), (int)idx.size());
    for (int k = 0; k < (int)idx.size(); ++k) out(idx[k], k) = cyc(1);
    return out;
}

int rel_end_dim(const RelativeYDModule& X) {
    const int N = X.dim();
    std::vector<Mat> comm;
    for (const Mat& a : X.base.action) comm.push_back(a);
    for (int d = 1; d < (int)X.act.size(); ++d)
        for (const Mat& a : X.act[d]) comm.push_back(a);
    for (int d = 1; d < (int)X.coact.size(); ++d) {
        const int dr = (int)X.coact[d].rows() / N;
        for (int r = 0; r < dr; ++r) {
            Mat s = linalg::zero(N, N);
            for (int j = 0; j < N; ++j)
                for (int i = 0; i < N; ++i) s(j, i) = X.coact[d](r * N + j, i);
            comm.push_back(s);
        }
    }

    std::vector<std::pair<int, int>> fixed_zero;
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const bool same = X.base.degree[x] == X.base.degree[y] &&
                              (X.zdeg.empty() || X.zdeg[x] == X.zdeg[y]);
            if (!same) fixed_zero.push_back({x, y});
        }

    const int rows = (int)comm.size() * N * N + (int)fixed_zero.size();
    Mat sys = linalg::zero(rows, N * N);
    int at = 0;
    for (const Mat& a : comm) {
        // (f a - a f)(x, i) = 0
        for (int x = 0; x < N; ++x)
            for (int i = 0; i < N; ++i) {
                for (int y = 0; y < N; ++y) {
                    sys(at, x * N + y) += a(y, i);
                    sys(at, y * N + i) -= a(x, y);
                }
                ++at;
            }
    }
    for (const auto& [x, y] : fixed_zero) sys(at++, x * N + y) = cyc(1);
    return (int)linalg::kernel(sys).cols();
}

bool rel_is_irreducible(const RelativeYDModule& X) { return rel_end_dim(X) == 1; }

CheckReport verify_degree_filtrations(const RelativeYDModule& X) {
    CheckReport rep;
    if (X.zdeg.empty() || X.dim() == 0) {
        rep.add("graded components consecutive", false);
        return rep;
    }
    const int n0 = *std::min_element(X.zdeg.begin(), X.zdeg.end());
    const int n1 = *std::max_element(X.zdeg.begin(), X.zdeg.end());
    std::set<int> present(X.zdeg.begin(), X.zdeg.end());
    rep.add("graded components consecutive", (int)present.size() == n1 - n0 + 1);
    rep.add("module irreducible", rel_is_irreducible(X));

    auto upto = [&](int lo, int hi) {
        std::vector<int> idx;
        for (int i = 0; i < X.dim(); ++i)
            if (X.zdeg[i] >= lo && X.zdeg[i] <= hi) idx.push_back(i);
        Mat u = linalg::zero(X.dim(), (int)idx.size());
        for (int k = 0; k < (int)idx.size(); ++k) u(idx[k], k) = cyc(1);
        return u;
    };
    bool okd = true, okm = true;
    for (int n = 0; n <= n1 - n0; ++n) {
        okd = okd && linalg::same_col_span(rel_fdelta(X, n), upto(n0, n0 + n));
        okm = okm && linalg::same_col_span(rel_fmu(X, n), upto(n1 - n, n1));
    }
    rep.add("coaction filtration matches the lower components", okd);
    rep.add("action filtration matches the upper components", okm);

    rep.add("bottom component irreducible over the group",
            yd_is_irreducible(yd_submodule(X.base, zdeg_component(X, n0)).module));
    rep.add("top component irreducible over the group",
            yd_is_irreducible(yd_submodule(X.base, zdeg_component(X, n1)).module));
    return rep;
}

}  // namespace ydn
