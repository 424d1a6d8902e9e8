#include "ydn/pairing.hpp"

#include <algorithm>
#include <string>

#include "ydn/errors.hpp"

namespace ydn {

namespace {

long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

const Mat& GradedPairing::gram(int n) const {
    if (n < 0 || n > cutoff()) throw cutoff_exceeded("pairing degree exceeds the cutoff");
    return gram_[n];
}

const Mat& GradedPairing::word_gram(int n) const {
    if (n < 0 || n > cutoff()) throw cutoff_exceeded("pairing degree exceeds the cutoff");
    return word_gram_[n];
}

Mat GradedPairing::gram_inverse(int n) const {
    const Mat& g = gram(n);
    if (g.rows() != g.cols()) throw pairing_degenerate("pairing matrix is not square in degree " + std::to_string(n));
    try {
        return linalg::inverse(g);
    } catch (const linalg::singular_error&) {
        throw pairing_degenerate("pairing is singular in degree " + std::to_string(n));
    }
}

GradedPairing canonical_pairing(const NicholsTruncation& Bdual, const NicholsTruncation& B) {
    if (!Bdual.module_backed() || !B.module_backed())
        throw input_error("pairing requires module-backed truncations");
    if (Bdual.letters() != B.letters())
        throw input_error("pairing requires the same number of letters on both sides");
    const int d = B.letters();
    const int cutoff = std::min(Bdual.cutoff(), B.cutoff());

    GradedPairing P;
    P.word_gram_.reserve(cutoff + 1);
    P.word_gram_.push_back(linalg::identity(1));
    if (cutoff >= 1) P.word_gram_.push_back(linalg::identity(d));
    for (int n = 2; n <= cutoff; ++n) {
        const long N = ipow(d, n);
        const long Nr = N / d;
        Mat wg = linalg::zero((int)N, (int)N);
        if (B.dim(n) > 0) {
            const Mat& D = B.tensor_comult(n - 1, 1);  // words -> words (x) letters
            const Mat& prev = P.word_gram_[n - 1];
            for (long w = 0; w < N; ++w)
                for (long t = 0; t < N; ++t) {
                    if (D(t, w).is_zero()) continue;
                    const long c = t / d;
                    const int k = (int)(t % d);
                    for (long rest = 0; rest < Nr; ++rest) {
                        if (prev(rest, c).is_zero()) continue;
                        wg(k * Nr + rest, w) += prev(rest, c) * D(t, w);
                    }
                }
        }
        P.word_gram_.push_back(wg);
    }

    P.gram_.reserve(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) {
        const Mat& wg = P.word_gram_[n];
        // both quotients must be well defined against the word pairing
        if (!linalg::is_zero_mat(wg * linalg::kernel(B.symmetrizer(n))) ||
            !linalg::is_zero_mat(linalg::kernel(Bdual.symmetrizer(n)).transpose() * wg))
            throw input_error("truncations are not dual to each other in degree " + std::to_string(n));
        const auto& rows = Bdual.basis_words(n);
        const auto& cols = B.basis_words(n);
        Mat g = linalg::zero((int)rows.size(), (int)cols.size());
        for (size_t a = 0; a < rows.size(); ++a)
            for (size_t b = 0; b < cols.size(); ++b) g((int)a, (int)b) = wg(rows[a], cols[b]);
        P.gram_.push_back(g);
    }
    return P;
}

std::vector<Mat> inverse_pairing(const std::vector<Mat>& gram, const NicholsTruncation& B) {
    std::vector<Mat> out;
    const int cutoff = std::min((int)gram.size() - 1, B.cutoff());
    out.reserve(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) {
        Mat U = B.antipode(n) * B.antipode(n) * B.theta(n);
        out.push_back((gram[n] * U).transpose());
    }
    return out;
}

std::vector<Mat> inverse_pairing(const GradedPairing& P, const NicholsTruncation& B) {
    std::vector<Mat> gram;
    for (int n = 0; n <= P.cutoff(); ++n) gram.push_back(P.gram(n));
    return inverse_pairing(gram, B);
}

namespace {

// Axiom items shared by the canonical pairing and its companion: `gram[n]`
// has rows over the degree-n basis of T and columns over the one of U.
void pairing_axiom_items(CheckReport& rep, const std::string& tag, const std::vector<Mat>& gram,
                         const NicholsTruncation& T, const NicholsTruncation& U) {
    const FiniteGroup& G = *T.base().G;
    const int top = (int)gram.size() - 1;

    bool action = true, support = true, antipode = true, nondeg = true;
    for (int n = 0; n <= top; ++n) {
        const Mat& g = gram[n];
        for (int h = 0; h < G.order(); ++h)
            action = action && linalg::is_zero_mat(T.h_action(h, n).transpose() * g -
                                                   g * U.h_action(G.inv(h), n));
        for (int a = 0; a < g.rows(); ++a)
            for (int b = 0; b < g.cols(); ++b)
                if (!g(a, b).is_zero() && T.basis_gdeg(n, a) != G.inv(U.basis_gdeg(n, b)))
                    support = false;
        antipode = antipode && linalg::is_zero_mat(T.antipode(n).transpose() * g - g * U.antipode(n));
        nondeg = nondeg && g.rows() == g.cols() && (g.rows() == 0 || linalg::rank(g) == (int)g.rows());
    }
    rep.add(tag + "group action moves across", action);
    rep.add(tag + "supported on inverse group degrees", support);
    rep.add(tag + "antipode moves across", antipode);
    rep.add(tag + "nondegenerate on the quotient", nondeg);

    bool row_mult = true, col_mult = true;
    for (int a = 1; a < top; ++a)
        for (int b = 1; a + b <= top; ++b) {
            const int da = U.dim(a), db = U.dim(b);
            const int ea = T.dim(a), eb = T.dim(b);

            // <xi eta, x> = sum <eta, x^(1)> <xi, x^(2)>, xi deg a, eta deg b
            Mat lhs = T.mult(a, b).transpose() * gram[a + b];
            Mat cd = U.comult(b, a);
            Mat rhs = linalg::zero((int)lhs.rows(), (int)lhs.cols());
            for (int x = 0; x < rhs.cols(); ++x)
                for (int i = 0; i < ea; ++i)
                    for (int j = 0; j < eb; ++j) {
                        cyc acc(0);
                        for (int r = 0; r < db; ++r)
                            for (int s = 0; s < da; ++s)
                                acc += cd(r * da + s, x) * gram[b](j, r) * gram[a](i, s);
                        rhs(i * eb + j, x) = acc;
                    }
            row_mult = row_mult && linalg::is_zero_mat(lhs - rhs);

            // <xi, x y> = sum <xi^(1), y> <xi^(2), x>, x deg a, y deg b
            lhs = gram[a + b] * U.mult(a, b);
            cd = T.comult(b, a);
            rhs = linalg::zero((int)lhs.rows(), (int)lhs.cols());
            for (int c = 0; c < rhs.rows(); ++c)
                for (int p = 0; p < da; ++p)
                    for (int q = 0; q < db; ++q) {
                        cyc acc(0);
                        for (int r = 0; r < eb; ++r)
                            for (int s = 0; s < ea; ++s)
                                acc += cd(r * ea + s, c) * gram[b](r, q) * gram[a](s, p);
                        rhs(c, p * db + q) = acc;
                    }
            col_mult = col_mult && linalg::is_zero_mat(lhs - rhs);
        }
    rep.add(tag + "multiplicative in the row slot", row_mult);
    rep.add(tag + "multiplicative in the column slot", col_mult);
}

}  // namespace

CheckReport pairing_suite(const NicholsTruncation& Bdual, const NicholsTruncation& B) {
    GradedPairing P = canonical_pairing(Bdual, B);
    std::vector<Mat> gram;
    gram.reserve(P.cutoff() + 1);
    for (int n = 0; n <= P.cutoff(); ++n) gram.push_back(P.gram(n));

    CheckReport rep;
    rep.add("pairing: unit pairs to one", linalg::is_zero_mat(gram[0] - linalg::identity(1)));
    rep.add("pairing: letters pair to dual bases",
            P.cutoff() < 1 || linalg::is_zero_mat(gram[1] - linalg::identity(B.letters())));
    pairing_axiom_items(rep, "pairing: ", gram, Bdual, B);

    std::vector<Mat> Q = inverse_pairing(gram, B);
    rep.add("companion: degree one is the pivot map",
            P.cutoff() < 1 || linalg::is_zero_mat(Q[1] - B.theta(1).transpose()));
    pairing_axiom_items(rep, "companion: ", Q, B, Bdual);
    return rep;
}

}  // namespace ydn
