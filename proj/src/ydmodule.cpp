#include "ydn/ydmodule.hpp"

#include <algorithm>
#include <string>

#include "ydn/errors.hpp"

namespace ydn {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw not_a_yd_module(what);
}

}  // namespace

void yd_validate(const YDModule& M) {
    require(M.G != nullptr, "missing group");
    const FiniteGroup& G = *M.G;
    const int n = M.dim();
    require((int)M.action.size() == G.order(), "one action matrix per group element required");
    require(M.component.empty() || (int)M.component.size() == n, "component tags must match the dimension");
    for (int d : M.degree) require(d >= 0 && d < G.order(), "degree out of range");
    for (int g = 0; g < G.order(); ++g) {
        require(M.action[g].rows() == n && M.action[g].cols() == n, "action matrix shape mismatch");
    }
    require(linalg::is_zero_mat(M.action[G.id()] - linalg::identity(n)), "identity must act trivially");
    for (int g = 0; g < G.order(); ++g) {
        for (int h = 0; h < G.order(); ++h) {
            if (!linalg::is_zero_mat(M.action[G.mul(g, h)] - M.action[g] * M.action[h])) {
                throw not_a_yd_module("action is not a homomorphism at (" + G.elem_str(g) + ", " + G.elem_str(h) + ")");
            }
        }
    }
    // Yetter-Drinfeld compatibility over kG: g . M_x <= M_{g x g^{-1}}.
    for (int g = 0; g < G.order(); ++g) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (M.action[g](i, j).is_zero()) continue;
                require(M.degree[i] == G.conjugate(g, M.degree[j]), "action does not respect the grading");
            }
        }
    }
}

YDModule yd_tensor(const YDModule& A, const YDModule& B) {
    YDModule T;
    T.G = A.G;
    T.degree.reserve((size_t)A.dim() * B.dim());
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j) T.degree.push_back(A.G->mul(A.degree[i], B.degree[j]));
    T.action.reserve(A.action.size());
    for (int g = 0; g < A.G->order(); ++g) T.action.push_back(linalg::kron(A.action[g], B.action[g]));
    return T;
}

YDModule yd_direct_sum(const std::vector<YDModule>& parts) {
    YDModule S;
    int total = 0;
    for (const auto& p : parts) {
        if (!S.G) S.G = p.G;
        total += p.dim();
    }
    S.action.assign(S.G ? S.G->order() : 0, linalg::zero(total, total));
    int off = 0;
    for (int k = 0; k < (int)parts.size(); ++k) {
        const YDModule& p = parts[k];
        for (int i = 0; i < p.dim(); ++i) {
            S.degree.push_back(p.degree[i]);
            S.component.push_back(k);
        }
        for (int g = 0; g < (int)S.action.size(); ++g)
            S.action[g].block(off, off, p.dim(), p.dim()) = p.action[g];
        off += p.dim();
    }
    return S;
}

Mat yd_braiding(const YDModule& A, const YDModule& B) {
    const int da = A.dim(), db = B.dim();
    Mat c = linalg::zero(db * da, da * db);
    for (int i = 0; i < da; ++i) {
        const Mat& act = B.action[A.degree[i]];
        for (int j = 0; j < db; ++j)
            for (int jp = 0; jp < db; ++jp) {
                if (act(jp, j).is_zero()) continue;
                c(jp * da + i, i * db + j) = act(jp, j);
            }
    }
    return c;
}

Mat yd_braiding_inv(const YDModule& A, const YDModule& B) {
    const int da = A.dim(), db = B.dim();
    Mat c = linalg::zero(da * db, db * da);
    for (int i = 0; i < da; ++i) {
        const Mat& act = B.action[A.G->inv(A.degree[i])];
        for (int j = 0; j < db; ++j)
            for (int jp = 0; jp < db; ++jp) {
                if (act(jp, j).is_zero()) continue;
                c(i * db + jp, j * da + i) = act(jp, j);
            }
    }
    return c;
}

YDModule yd_dual(const YDModule& M) {
    YDModule D;
    D.G = M.G;
    D.degree.reserve(M.degree.size());
    for (int d : M.degree) D.degree.push_back(M.G->inv(d));
    D.action.reserve(M.action.size());
    for (int g = 0; g < M.G->order(); ++g) D.action.push_back(M.action[M.G->inv(g)].transpose());
    D.component = M.component;
    return D;
}

Mat yd_theta(const YDModule& M) {
    Mat T = linalg::zero(M.dim(), M.dim());
    for (int j = 0; j < M.dim(); ++j) T.col(j) = M.action[M.G->inv(M.degree[j])].col(j);
    return T;
}

Mat yd_theta_inv(const YDModule& M) {
    Mat T = linalg::zero(M.dim(), M.dim());
    for (int j = 0; j < M.dim(); ++j) T.col(j) = M.action[M.degree[j]].col(j);
    return T;
}

Mat yd_hom_space(const YDModule& A, const YDModule& B) {
    const int da = A.dim(), db = B.dim();
    const int nvars = da * db;  // X(i,j) at i + j*db, column-major
    std::vector<Mat> rows;
    Mat degree_rows = linalg::zero(nvars, nvars);
    int ndeg = 0;
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < da; ++j)
            if (B.degree[i] != A.degree[j]) degree_rows(ndeg++, i + j * db) = cyc(1);
    const int G = A.G->order();
    Mat sys = linalg::zero(ndeg + G * da * db, nvars);
    sys.topRows(ndeg) = degree_rows.topRows(ndeg);
    int r = ndeg;
    for (int g = 0; g < G; ++g) {
        const Mat& Ag = A.action[g];
        const Mat& Bg = B.action[g];
        // (X Ag - Bg X)(i, l) = 0
        for (int i = 0; i < db; ++i)
            for (int l = 0; l < da; ++l) {
                for (int j = 0; j < da; ++j)
                    if (!Ag(j, l).is_zero()) sys(r, i + j * db) += Ag(j, l);
                for (int k = 0; k < db; ++k)
                    if (!Bg(i, k).is_zero()) sys(r, k + l * db) -= Bg(i, k);
                ++r;
            }
    }
    return linalg::kernel(sys);
}

bool yd_is_irreducible(const YDModule& M) {
    if (M.dim() == 0) return false;
    return yd_hom_space(M, M).cols() == 1;
}

namespace {

Mat unvectorize(const Mat& col, int rows, int cols) {
    Mat X = linalg::zero(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) X(i, j) = col(i + j * rows, 0);
    return X;
}

}  // namespace

std::optional<Mat> yd_find_isomorphism(const YDModule& A, const YDModule& B) {
    if (A.dim() != B.dim()) return std::nullopt;
    const int d = A.dim();
    if (d == 0) return linalg::zero(0, 0);
    Mat hom = yd_hom_space(A, B);
    const int m = (int)hom.cols();
    // With A = sum S_i^{a_i} and B = sum S_i^{b_i} (semisimple, End S_i = k),
    // dim Hom(A,B) = sum a_i b_i, so equality with both endomorphism
    // dimensions forces sum (a_i - b_i)^2 = 0, i.e. A and B are isomorphic.
    if (m == 0 || m != (int)yd_hom_space(A, A).cols() || m != (int)yd_hom_space(B, B).cols())
        return std::nullopt;
    // An invertible intertwiner exists, and the singular ones form a
    // hypersurface of degree d, so some coefficient tuple in {0..d}^m
    // escapes it. Scan that grid in mixed-radix order.
    std::vector<long> digits(m, 0);
    while (true) {
        int pos = 0;
        while (pos < m && digits[pos] == d) digits[pos++] = 0;
        if (pos == m) break;
        ++digits[pos];
        Mat col = linalg::zero(d * d, 1);
        for (int t = 0; t < m; ++t)
            if (digits[t] != 0) col += cyc(digits[t]) * hom.col(t);
        Mat X = unvectorize(col, d, d);
        if (linalg::rank(X) == d) return X;
    }
    return std::nullopt;  // unreachable: the grid always contains a witness
}

SubmoduleView yd_submodule(const YDModule& M, const Mat& span) {
    const FiniteGroup& G = *M.G;
    const int n = M.dim();
    const int r = linalg::rank(span);
    // Split the span degreewise; a stable graded subspace is the direct sum
    // of its homogeneous parts, so anything lost here means "not graded".
    std::vector<Mat> parts;
    std::vector<int> part_degree;
    int found = 0;
    for (int x = 0; x < G.order(); ++x) {
        int dx = 0;
        for (int i = 0; i < n; ++i)
            if (M.degree[i] == x) ++dx;
        if (dx == 0) continue;
        Mat coords = linalg::zero(n, dx);
        int c = 0;
        for (int i = 0; i < n; ++i)
            if (M.degree[i] == x) coords(i, c++) = cyc(1);
        Mat inter = linalg::span_intersection(span, coords);
        if (inter.cols() == 0) continue;
        parts.push_back(inter);
        part_degree.push_back(x);
        found += (int)inter.cols();
    }
    if (found != r) throw not_a_yd_module("subspace is not graded");

    SubmoduleView view;
    view.inclusion = linalg::zero(n, r);
    view.module.G = M.G;
    int c = 0;
    for (size_t p = 0; p < parts.size(); ++p)
        for (int j = 0; j < (int)parts[p].cols(); ++j) {
            view.inclusion.col(c++) = parts[p].col(j);
            view.module.degree.push_back(part_degree[p]);
        }
    view.module.action.reserve(G.order());
    for (int g = 0; g < G.order(); ++g) {
        bool ok = true;
        Mat X = linalg::solve(view.inclusion, M.action[g] * view.inclusion, &ok);
        if (!ok) throw not_a_yd_module("subspace is not stable under " + G.elem_str(g));
        view.module.action.push_back(X);
    }
    yd_validate(view.module);
    return view;
}

YDModule class_module(std::shared_ptr<const FiniteGroup> Gp, int class_rep, const std::vector<cyc>& rho) {
    const FiniteGroup& G = *Gp;
    if ((int)rho.size() != G.order()) throw input_error("character vector must have one entry per group element");
    std::vector<int> Z = G.centralizer(class_rep);
    for (int s : Z) {
        if (rho[s].is_zero()) throw input_error("character must be nonzero on the centralizer");
        for (int t : Z) {
            if (rho[G.mul(s, t)] != rho[s] * rho[t])
                throw input_error("not a character of the centralizer");
        }
    }
    std::vector<int> cls = G.conjugacy_class(class_rep);
    const int n = (int)cls.size();
    auto class_index = [&](int x) {
        return (int)(std::lower_bound(cls.begin(), cls.end(), x) - cls.begin());
    };
    std::vector<int> rep(n, -1);  // smallest h with h class_rep h^{-1} = cls[i]
    for (int h = 0; h < G.order(); ++h) {
        int i = class_index(G.conjugate(h, class_rep));
        if (rep[i] < 0) rep[i] = h;
    }
    YDModule M;
    M.G = Gp;
    M.degree = cls;
    M.action.assign(G.order(), linalg::zero(n, n));
    for (int g = 0; g < G.order(); ++g) {
        for (int i = 0; i < n; ++i) {
            int j = class_index(G.conjugate(g, cls[i]));
            int s = G.mul(G.inv(rep[j]), G.mul(g, rep[i]));
            M.action[g](j, i) = rho[s];
        }
    }
    return M;
}

YDModule diagonal_module(const DiagonalData& d, int j) {
    YDModule M;
    M.G = d.G;
    M.degree = {d.g[j]};
    M.action.reserve(d.G->order());
    for (int g = 0; g < d.G->order(); ++g) {
        Mat a = linalg::zero(1, 1);
        a(0, 0) = d.character(j, g);
        M.action.push_back(a);
    }
    return M;
}

std::vector<YDModule> diagonal_tuple(const DiagonalData& d) {
    std::vector<YDModule> out;
    out.reserve(d.theta);
    for (int j = 0; j < d.theta; ++j) out.push_back(diagonal_module(d, j));
    return out;
}

}  // namespace ydn
