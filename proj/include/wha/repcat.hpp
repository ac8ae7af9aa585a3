#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "wha/fusion.hpp"
#include "wha/integrals.hpp"
#include "wha/wedderburn.hpp"

namespace wha {

// ---------------------------------------------------------------------------
// Inclusion of the source base A_s in A
// ---------------------------------------------------------------------------

struct InclusionData {
    std::vector<std::vector<long long>> lambda;  // l x n multiplicity matrix
    std::vector<int> n_alpha;                    // matrix sizes of A_s-blocks
    std::vector<CVec> p;                         // central primitive idempotents of A_s, A-coords
    std::vector<QVec> p_exact;                   // nonempty when the split is rational
    Subalgebra as_sub;                           // A_s with its own structure constants
    WedderburnData as_wd;

    bool exact() const { return !p_exact.empty(); }
};

inline InclusionData inclusion_matrix(const WeakHopfAlgebra& A, const WedderburnData& wd,
                                      const Tolerances& tol, std::uint64_t seed) {
    InclusionData inc;
    Subspace as_basis = bases(A).source;
    Algebra full = A.as_algebra();
    inc.as_sub = subalgebra(full, as_basis, A.label + ".A_s");
    inc.as_wd = wedderburn(inc.as_sub.alg, tol, seed ^ 0xa5a5a5a5ull);

    const size_t l = inc.as_wd.blocks.size();
    int sumsq = 0;
    for (const auto& blk : inc.as_wd.blocks) {
        inc.n_alpha.push_back(blk.dim);
        sumsq += blk.dim * blk.dim;
        CVec lifted = CVec::Zero(A.n);
        for (size_t b = 0; b < as_basis.size(); ++b)
            lifted += blk.idempotent(b) * to_cvec(as_basis[b]);
        inc.p.push_back(lifted);
    }
    if (sumsq != static_cast<int>(as_basis.size()))
        throw Error(ErrorKind::Internal, "A_s block dimensions do not add up");
    if (inc.as_wd.exact) {
        for (const auto& blk : inc.as_wd.blocks) {
            QVec lifted(A.n, Rational(0));
            for (size_t b = 0; b < as_basis.size(); ++b)
                axpy(lifted, (*blk.idempotent_exact)[b], as_basis[b]);
            inc.p_exact.push_back(lifted);
        }
    }

    inc.lambda.assign(l, std::vector<long long>(wd.blocks.size(), 0));
    for (size_t a = 0; a < l; ++a)
        for (size_t j = 0; j < wd.blocks.size(); ++j) {
            Cplx chi_p(0, 0);
            for (size_t i = 0; i < A.n; ++i) chi_p += wd.blocks[j].character(i) * inc.p[a](i);
            auto m = round_int(chi_p / static_cast<double>(inc.n_alpha[a]), tol);
            if (!m || *m < 0)
                throw Error(ErrorKind::NotIntegral, "inclusion multiplicity fails integer rounding");
            inc.lambda[a][j] = *m;
        }
    return inc;
}

// ---------------------------------------------------------------------------
// Dimension invariants
// ---------------------------------------------------------------------------

struct DimensionData {
    int d = 0;                    // dim A_t
    Rational dimA_exact;          // Tr(S^2|_A) / d^2
    double dimA = 0;
    std::vector<double> f;        // FPdim(V_j)
    std::vector<double> sqnorms;  // |V_j|^2
    double fpdimA = 0;
    double mu = 0;                // index: sum dim_k(V_j) FPdim(V_j)
    std::vector<double> v;        // v_alpha = <rho, p_alpha> / (n_alpha mu)
    bool bounds_ok = true;        // |V|^2 <= FPdim(V)^2 and dim(A) <= FPdim(A)
};

inline DimensionData dimension_data(const WeakHopfAlgebra& A, const WedderburnData& wd,
                                    const std::vector<double>& fp, const CVec& rho,
                                    const InclusionData& inc, const Tolerances& tol) {
    DimensionData dd;
    dd.d = static_cast<int>(bases(A).target.size());
    Rational d2(static_cast<long long>(dd.d) * dd.d);
    dd.dimA_exact = trace_s2(A) / d2;
    dd.dimA = dd.dimA_exact.to_double();
    dd.f = fp;

    QMatrix s2 = s_squared(A);
    CMat s2c = to_cmat(s2);
    Algebra alg = A.as_algebra();
    for (const auto& blk : wd.blocks) {
        CMat proj = left_mult_cmat(alg, blk.idempotent);
        double t = (s2c * proj).trace().real();
        dd.sqnorms.push_back(t / d2.to_double());
    }

    dd.fpdimA = 0;
    dd.mu = 0;
    for (size_t j = 0; j < wd.blocks.size(); ++j) {
        dd.fpdimA += fp[j] * fp[j];
        dd.mu += static_cast<double>(wd.blocks[j].dim) * fp[j];
    }

    for (size_t a = 0; a < inc.p.size(); ++a) {
        Cplx val(0, 0);
        for (size_t i = 0; i < A.n; ++i) val += rho(i) * inc.p[a](i);
        dd.v.push_back(val.real() / (inc.n_alpha[a] * dd.mu));
    }

    const double loose = tol.loose();
    double total = 0;
    for (size_t j = 0; j < dd.sqnorms.size(); ++j) {
        total += dd.sqnorms[j];
        if (dd.sqnorms[j] > fp[j] * fp[j] + loose) dd.bounds_ok = false;
    }
    if (std::abs(total - dd.dimA) > loose * std::max(1.0, dd.dimA)) dd.bounds_ok = false;
    if (dd.dimA > dd.fpdimA + loose) dd.bounds_ok = false;
    return dd;
}

// Lambda f = mu v, Lambda^t v = f, and the two eigenvector identities.
inline bool verify_LL(const InclusionData& inc, const DimensionData& dd, const Tolerances& tol,
                      std::string* detail = nullptr) {
    const size_t l = inc.lambda.size();
    const size_t n = dd.f.size();
    const double loose = tol.loose();
    auto close = [&](double a, double b) { return std::abs(a - b) <= loose * std::max(1.0, std::abs(b)); };
    bool ok = true;
    for (size_t a = 0; a < l; ++a) {
        double lf = 0;
        for (size_t j = 0; j < n; ++j) lf += static_cast<double>(inc.lambda[a][j]) * dd.f[j];
        if (!close(lf, dd.mu * dd.v[a])) ok = false;
    }
    for (size_t j = 0; j < n; ++j) {
        double ltv = 0;
        for (size_t a = 0; a < l; ++a) ltv += static_cast<double>(inc.lambda[a][j]) * dd.v[a];
        if (!close(ltv, dd.f[j])) ok = false;
    }
    for (size_t j = 0; j < n; ++j) {
        double acc = 0;
        for (size_t a = 0; a < l; ++a) {
            double lf = 0;
            for (size_t k = 0; k < n; ++k) lf += static_cast<double>(inc.lambda[a][k]) * dd.f[k];
            acc += static_cast<double>(inc.lambda[a][j]) * lf;
        }
        if (!close(acc, dd.mu * dd.f[j])) ok = false;
    }
    for (size_t a = 0; a < l; ++a) {
        double acc = 0;
        for (size_t b = 0; b < l; ++b) {
            double inner = 0;
            for (size_t j = 0; j < n; ++j)
                inner += static_cast<double>(inc.lambda[a][j] * inc.lambda[b][j]) * dd.v[b];
            acc += inner;
        }
        if (!close(acc, dd.mu * dd.v[a])) ok = false;
    }
    if (detail && !ok) *detail = "inclusion eigenvector identities fail";
    return ok;
}

// ---------------------------------------------------------------------------
// Frobenius-Perron element of A_s
// ---------------------------------------------------------------------------

struct FPElement {
    CVec w;             // mu^{-1} (rho -> 1), element of Z(A_s)
    CVec w_conjugator;  // g = w S(w)^{-1}
    bool eigen_ok = false;      // Tr_V -> w = FPdim(V) w for all irreducibles
    bool vector_w_ok = false;   // Tr_V(z w S(w)^{-1}) = FPdim(V) eps(z) on A_t
    bool positive_ok = false;   // spectrum of w strictly positive
};

inline FPElement fp_element(const WeakHopfAlgebra& A, const WedderburnData& wd,
                            const std::vector<double>& fp, const CVec& rho,
                            const DimensionData& dd, const Tolerances& tol) {
    FPElement fe;
    const size_t n = A.n;
    QMatrix d1 = A.unit_coprod();
    fe.w = CVec::Zero(n);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            if (!d1(j, k).is_zero()) fe.w(j) += d1(j, k).to_double() * rho(k);
    fe.w /= dd.mu;

    const double loose = tol.loose();
    double wscale = std::max(1.0, fe.w.cwiseAbs().maxCoeff());

    // coproduct matrix of w
    CMat dw = CMat::Zero(n, n);
    for (size_t i = 0; i < n; ++i) {
        if (fe.w(i) == Cplx(0, 0)) continue;
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                if (!A.comult(i, a, b).is_zero()) dw(a, b) += fe.w(i) * A.comult(i, a, b).to_double();
    }
    fe.eigen_ok = true;
    for (size_t j = 0; j < wd.blocks.size(); ++j) {
        CVec lhs = dw * wd.blocks[j].character.transpose();
        if ((lhs - fp[j] * fe.w).cwiseAbs().maxCoeff() > loose * 100 * wscale) fe.eigen_ok = false;
    }

    Algebra alg = A.as_algebra();
    CVec sw = CVec::Zero(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (!A.antipode(r, c).is_zero()) sw(r) += A.antipode(r, c).to_double() * fe.w(c);
    Eigen::FullPivLU<CMat> lu(left_mult_cmat(alg, sw));
    if (!lu.isInvertible()) throw Error(ErrorKind::Internal, "S(w) is not invertible");
    CVec sw_inv = lu.solve(to_cvec(A.unit));
    fe.w_conjugator = cmul(alg, fe.w, sw_inv);

    fe.vector_w_ok = true;
    for (const auto& z : bases(A).target) {
        CVec zg = cmul(alg, to_cvec(z), fe.w_conjugator);
        double eps_z = dot(A.counit, z).to_double();
        for (size_t j = 0; j < wd.blocks.size(); ++j) {
            Cplx tr(0, 0);
            for (size_t i = 0; i < n; ++i) tr += wd.blocks[j].character(i) * zg(i);
            if (std::abs(tr - Cplx(fp[j] * eps_z, 0)) > loose * 100 * std::max(1.0, std::abs(eps_z)))
                fe.vector_w_ok = false;
        }
    }

    fe.positive_ok = true;
    for (Cplx ev : eigenvalues(left_mult_cmat(alg, fe.w)))
        if (!(ev.real() > loose) || std::abs(ev.imag()) > loose) fe.positive_ok = false;
    return fe;
}

// w_{A^*} and (w_A -> eps) are proportional; w_{A^*} is realized as
// eps_s(rho) computed in the dual.
inline bool w_colinearity(const WeakHopfAlgebra& A, const CVec& rho, const FPElement& fe,
                          const Tolerances& tol) {
    const size_t n = A.n;
    WeakHopfAlgebra D = dual(A);
    QMatrix es_dual = D.eps_s_matrix();
    CVec w_star = CVec::Zero(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (!es_dual(r, c).is_zero()) w_star(r) += es_dual(r, c).to_double() * rho(c);

    QMatrix e = A.counit_pair_table();
    CVec w_eps = CVec::Zero(n);
    for (size_t g = 0; g < n; ++g)
        for (size_t j = 0; j < n; ++j)
            if (!e(g, j).is_zero()) w_eps(g) += e(g, j).to_double() * fe.w(j);

    Eigen::Index imax = 0;
    w_eps.cwiseAbs().maxCoeff(&imax);
    if (std::abs(w_eps(imax)) < tol.zero) return false;
    Cplx scale = w_star(imax) / w_eps(imax);
    return (w_star - scale * w_eps).cwiseAbs().maxCoeff() <=
           tol.loose() * 100 * std::max(1.0, w_star.cwiseAbs().maxCoeff());
}

// ---------------------------------------------------------------------------
// Pseudo-unitarity and the canonical pivotal element
// ---------------------------------------------------------------------------

inline bool spectrum_positive(const std::vector<Cplx>& evs, const Tolerances& tol) {
    for (Cplx ev : evs)
        if (!(ev.real() > tol.loose()) || std::abs(ev.imag()) > tol.loose()) return false;
    return true;
}

// dim(A) = FPdim(A), cross-checked against positivity of the S^2 spectrum;
// disagreement is a fatal implementation bug.
inline bool is_pseudounitary(const WeakHopfAlgebra& A, const DimensionData& dd,
                             const Tolerances& tol) {
    bool pu = std::abs(dd.dimA - dd.fpdimA) < tol.loose() * std::max(1.0, dd.fpdimA);
    bool pos = spectrum_positive(s2_eigenvalues(A), tol);
    if (pu != pos)
        throw Error(ErrorKind::EquivalenceViolated,
                    "pseudo-unitarity verdict disagrees with S^2 spectrum positivity");
    return pu;
}

struct PivotalData {
    CVec g;                           // canonical pivotal element w S(w)^{-1}
    std::optional<GroupLike> exact;   // rationalized and exactly verified
    bool grouplike_ok = false;
    bool ad_ok = false;               // Ad_G = S^2 as matrices
    bool trivial_ok = false;          // G = y S(y)^{-1} for invertible y in A_s
    std::vector<double> quantum_dims; // chi_j(G) / d
    bool sqnorm_ok = false;           // |V_j|^2 = d_j d_{j*}
    bool lambda_d_ok = false;         // Lambda d != 0 => G trivial
};

inline PivotalData canonical_pivotal(const WeakHopfAlgebra& A, const WedderburnData& wd,
                                     const FusionRing& fr, const DimensionData& dd,
                                     const FPElement& fe, const InclusionData& inc,
                                     bool pseudounitary, const Tolerances& tol) {
    if (!pseudounitary)
        throw Error(ErrorKind::NotPseudoUnitary, "canonical pivotal element needs dim(A) = FPdim(A)");
    PivotalData pd;
    pd.g = fe.w_conjugator;
    const size_t n = A.n;
    const double loose100 = tol.loose() * 100;
    Algebra alg = A.as_algebra();

    // Ad_G = S^2 within tolerance
    Eigen::FullPivLU<CMat> lu(left_mult_cmat(alg, pd.g));
    if (!lu.isInvertible()) throw Error(ErrorKind::Internal, "pivotal candidate not invertible");
    CVec ginv = lu.solve(to_cvec(A.unit));
    CMat ad = CMat::Zero(n, n);
    for (size_t i = 0; i < n; ++i) {
        CVec col = CVec::Zero(n);
        col(i) = 1;
        CVec image = cmul(alg, cmul(alg, pd.g, col), ginv);
        for (size_t r = 0; r < n; ++r) ad(r, i) = image(r);
    }
    pd.ad_ok = (ad - to_cmat(s_squared(A))).cwiseAbs().maxCoeff() <= loose100;

    auto exact_g = rationalize_vec(pd.g, 1e-7);
    if (exact_g && is_grouplike(A, *exact_g)) {
        pd.grouplike_ok = true;
        GroupLike gl;
        gl.element = *exact_g;
        gl.inverse = *invert_element(A, *exact_g);
        gl.trivial_witness = is_trivial(A, *exact_g);
        pd.trivial_ok = gl.trivial_witness.has_value();
        pd.exact = gl;
    } else {
        // numeric group-like test
        CMat d1 = to_cmat(A.unit_coprod());
        CMat dg = CMat::Zero(n, n);
        for (size_t i = 0; i < n; ++i) {
            if (pd.g(i) == Cplx(0, 0)) continue;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    if (!A.comult(i, a, b).is_zero())
                        dg(a, b) += pd.g(i) * A.comult(i, a, b).to_double();
        }
        CMat lg = left_mult_cmat(alg, pd.g);
        CMat rg = CMat::Zero(n, n);
        {
            QMatrix id = QMatrix::identity(n);
            for (size_t i = 0; i < n; ++i) {
                CVec col = CVec::Zero(n);
                col(i) = 1;
                CVec image = cmul(alg, col, pd.g);
                for (size_t r = 0; r < n; ++r) rg(r, i) = image(r);
            }
        }
        pd.grouplike_ok =
            (dg - lg * d1 * lg.transpose()).cwiseAbs().maxCoeff() <= loose100 &&
            (dg - rg * d1 * rg.transpose()).cwiseAbs().maxCoeff() <= loose100;
        pd.trivial_ok = false;  // exact triviality certificate unavailable
    }

    for (size_t j = 0; j < wd.blocks.size(); ++j) {
        Cplx tr(0, 0);
        for (size_t i = 0; i < n; ++i) tr += wd.blocks[j].character(i) * pd.g(i);
        pd.quantum_dims.push_back(tr.real() / dd.d);
    }
    pd.sqnorm_ok = true;
    for (size_t j = 0; j < wd.blocks.size(); ++j) {
        double expect = pd.quantum_dims[j] * pd.quantum_dims[fr.star[j]];
        if (std::abs(dd.sqnorms[j] - expect) > loose100) pd.sqnorm_ok = false;
    }
    // Lambda d != 0 implies triviality
    bool lambda_d_nonzero = false;
    for (const auto& row : inc.lambda) {
        double acc = 0;
        for (size_t j = 0; j < row.size(); ++j) acc += static_cast<double>(row[j]) * pd.quantum_dims[j];
        if (std::abs(acc) > loose100) lambda_d_nonzero = true;
    }
    pd.lambda_d_ok = !lambda_d_nonzero || pd.trivial_ok;
    return pd;
}

// S^2 = Ad_G for a supplied group-like candidate, exactly.
inline bool verify_pivotal(const WeakHopfAlgebra& A, const GroupLike& g) {
    if (!is_grouplike(A, g.element)) throw Error(ErrorKind::NotPivotal, "element is not group-like");
    QMatrix s2 = s_squared(A);
    for (size_t i = 0; i < A.n; ++i) {
        QVec lhs = s2.col(i);
        QVec rhs = A.mul(A.mul(g.element, A.basis_vec(i)), g.inverse);
        if (lhs != rhs) return false;
    }
    return true;
}

inline std::vector<double> quantum_dims(const WedderburnData& wd, const QVec& g, int d) {
    std::vector<double> out;
    for (const auto& blk : wd.blocks) {
        Cplx tr(0, 0);
        for (size_t i = 0; i < g.size(); ++i) tr += blk.character(i) * g[i].to_double();
        out.push_back(tr.real() / d);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Counital identities for the canonical integral
// ---------------------------------------------------------------------------

struct CounitalsReport {
    bool eps_t_ok = false;
    bool eps_s_ok = false;
    bool exact = false;  // whether the eps_s identity was checked exactly
};

// eps_t(lambda) = (Tr(S^2|_A)/dim A_s) eps and
// eps_s(lambda) = sum_a (Tr(S^2|_{p_a A})/dim(p_a A_s)) (p_a -> eps).
inline CounitalsReport counitals_of_lambda_check(const WeakHopfAlgebra& A,
                                                 const InclusionData& inc,
                                                 const Tolerances& tol) {
    if (!connectivity(A).connected)
        throw Error(ErrorKind::NotConnected, "counital identities need a connected algebra");
    CounitalsReport rep;
    const size_t n = A.n;
    QVec lambda = canonical_integral(A);
    WeakHopfAlgebra D = dual(A);
    QMatrix s2 = s_squared(A);

    Rational dim_as(static_cast<long long>(inc.as_sub.basis.size()));
    QVec lhs_t = D.eps_t_matrix().apply(lambda);
    QVec rhs_t = scaled(A.counit, trace_s2(A) / dim_as);
    rep.eps_t_ok = lhs_t == rhs_t;

    QMatrix e = A.counit_pair_table();
    QVec lhs_s = D.eps_s_matrix().apply(lambda);
    if (inc.exact()) {
        rep.exact = true;
        QVec rhs_s(n, Rational(0));
        for (size_t a = 0; a < inc.p_exact.size(); ++a) {
            const QVec& p = inc.p_exact[a];
            Rational tr_block = (A.left_mult(p) * s2).trace();
            QVec p_in_sub = *solve(QMatrix::from_columns(inc.as_sub.basis), p);
            Rational dim_pas = inc.as_sub.alg.left_mult(p_in_sub).trace();
            QVec arrow = e.apply(p);  // (p -> eps)(e_g) = eps(e_g p)
            axpy(rhs_s, tr_block / dim_pas, arrow);
        }
        rep.eps_s_ok = lhs_s == rhs_s;
    } else {
        CVec rhs_s = CVec::Zero(n);
        CMat s2c = to_cmat(s2);
        Algebra alg = A.as_algebra();
        for (size_t a = 0; a < inc.p.size(); ++a) {
            double tr_block = (left_mult_cmat(alg, inc.p[a]) * s2c).trace().real();
            double dim_pas = 0;  // trace of left mult by p on A_s
            QMatrix bmat = QMatrix::from_columns(inc.as_sub.basis);
            CMat sub_l = left_mult_cmat(inc.as_sub.alg, inc.as_wd.blocks[a].idempotent);
            dim_pas = sub_l.trace().real();
            CVec arrow = CVec::Zero(n);
            for (size_t g = 0; g < n; ++g)
                for (size_t j = 0; j < n; ++j)
                    if (!e(g, j).is_zero()) arrow(g) += e(g, j).to_double() * inc.p[a](j);
            rhs_s += (tr_block / dim_pas) * arrow;
        }
        double dist = 0;
        for (size_t i = 0; i < n; ++i) dist = std::max(dist, std::abs(rhs_s(i) - lhs_s[i].to_double()));
        rep.eps_s_ok = dist <= tol.loose() * 100;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Aggregated representation data
// ---------------------------------------------------------------------------

struct RepData {
    WedderburnData wd;
    FusionRing fusion;
    std::vector<double> f;
    CVec rho;
    InclusionData incl;
    DimensionData dims;
};

inline RepData compute_repdata(const WeakHopfAlgebra& A, const Config& cfg) {
    RepData rd;
    rd.wd = wedderburn(A.as_algebra(), cfg.tol, cfg.seed);
    rd.fusion = fusion_ring(A, rd.wd, cfg.tol);
    rd.f = fp_dimensions(rd.fusion, cfg.tol);
    rd.rho = fp_character(rd.wd, rd.f);
    rd.incl = inclusion_matrix(A, rd.wd, cfg.tol, cfg.seed);
    rd.dims = dimension_data(A, rd.wd, rd.f, rd.rho, rd.incl, cfg.tol);
    return rd;
}

}  // namespace wha
