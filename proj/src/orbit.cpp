#include "parhol/orbit.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace parhol {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::complex;

constexpr double kConstructionTol = 1e-12;
constexpr double kClosureTol = 1e-10;
constexpr double kCertTol = 1e-9;
constexpr double kNullTol = 1e-8;

const complex<double> I(0.0, 1.0);

// Basis of u(m): i E_kk, then for k < l the pair E_kl - E_lk and
// i(E_kl + E_lk).
std::vector<MatrixXcd> u_basis(int m) {
    std::vector<MatrixXcd> out;
    for (int k = 0; k < m; ++k) {
        MatrixXcd X = MatrixXcd::Zero(m, m);
        X(k, k) = I;
        out.push_back(X);
    }
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
            MatrixXcd X = MatrixXcd::Zero(m, m);
            X(k, l) = 1;
            X(l, k) = -1;
            out.push_back(X);
            MatrixXcd Y = MatrixXcd::Zero(m, m);
            Y(k, l) = I;
            Y(l, k) = I;
            out.push_back(Y);
        }
    return out;
}

// Traceless part of u(m).
std::vector<MatrixXcd> su_basis(int m) {
    std::vector<MatrixXcd> out;
    for (int k = 0; k + 1 < m; ++k) {
        MatrixXcd X = MatrixXcd::Zero(m, m);
        X(k, k) = I;
        X(k + 1, k + 1) = -I;
        out.push_back(X);
    }
    auto full = u_basis(m);
    out.insert(out.end(), full.begin() + m, full.end());
    return out;
}

std::vector<MatrixXcd> so_basis(int m) {
    std::vector<MatrixXcd> out;
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
            MatrixXcd X = MatrixXcd::Zero(m, m);
            X(k, l) = 1;
            X(l, k) = -1;
            out.push_back(X);
        }
    return out;
}

// Isometry C^D -> C^m (x) C^m onto the symmetric (sym = true) or
// alternating square, in the inner product inherited from the tensor
// square.
MatrixXcd square_isometry(int m, bool sym) {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<VectorXcd> cols;
    for (int k = 0; k < m; ++k)
        for (int l = k; l < m; ++l) {
            if (k == l && !sym) continue;
            VectorXcd c = VectorXcd::Zero(m * m);
            if (k == l) {
                c(k * m + k) = 1;
            } else {
                c(k * m + l) = s;
                c(l * m + k) = sym ? s : -s;
            }
            cols.push_back(c);
        }
    MatrixXcd S(m * m, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) S.col(j) = cols[j];
    return S;
}

VectorXd real_vec(const MatrixXcd& M) {
    VectorXd r(2 * M.size());
    Eigen::Map<const VectorXcd> flat(M.data(), M.size());
    r.head(M.size()) = flat.real();
    r.tail(M.size()) = flat.imag();
    return r;
}

// Orthonormal basis of the column span of B, via the eigen-decomposition
// of B B^*. The spectra here are sharply gapped (O(1) vs roundoff), so a
// relative eigenvalue cutoff is safe.
MatrixXcd col_span(const MatrixXcd& B) {
    if (B.cols() == 0) return MatrixXcd(B.rows(), 0);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(B * B.adjoint());
    const VectorXd& ev = es.eigenvalues();  // ascending
    double cut = 1e-10 * std::max(1.0, ev(ev.size() - 1));
    long r = 0;
    for (long i = 0; i < ev.size(); ++i)
        if (ev(i) > cut) ++r;
    return es.eigenvectors().rightCols(r);
}

// Orthonormal basis of the kernel of a real matrix, plus the worst
// residual of the vectors returned.
std::pair<MatrixXd, double> real_kernel(const MatrixXd& A) {
    Eigen::JacobiSVD<MatrixXd> svd(A, Eigen::ComputeFullV);
    const VectorXd& sv = svd.singularValues();
    double scale = sv.size() ? std::max(1.0, sv(0)) : 1.0;
    long rank = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > kNullTol * scale) ++rank;
    MatrixXd K = svd.matrixV().rightCols(A.cols() - rank);
    double res = 0;
    for (long j = 0; j < K.cols(); ++j)
        res = std::max(res, (A * K.col(j)).norm());
    return {K, res};
}

MatrixXcd combine(const std::vector<MatrixXcd>& rho,
                  const Eigen::Ref<const VectorXd>& c) {
    MatrixXcd X = MatrixXcd::Zero(rho[0].rows(), rho[0].cols());
    for (size_t k = 0; k < rho.size(); ++k) X += c(k) * rho[k];
    return X;
}

// Slice matrices: action of each k_0 basis element on N, highest weight
// shifted off.
std::vector<MatrixXcd> slice_matrices(const MatrixModel& m,
                                      const Decomposition& d) {
    std::vector<MatrixXcd> out;
    for (long j = 0; j < d.k0_coords.cols(); ++j) {
        MatrixXcd X = combine(m.rho, d.k0_coords.col(j));
        complex<double> lambda = m.v.dot(X * m.v);
        out.push_back(d.n_basis.adjoint() *
                      (X * d.n_basis - lambda * d.n_basis));
    }
    return out;
}

void run_construction_checks(MatrixModel& m) {
    const long K = m.rho.size();
    for (const auto& X : m.rho)
        m.antiherm_residual = std::max(
            m.antiherm_residual, (X + X.adjoint()).cwiseAbs().maxCoeff());
    if (m.antiherm_residual > kConstructionTol)
        throw std::runtime_error(m.case_name +
                                 ": basis is not anti-Hermitian");
    // [k, k] subset k, checked by least squares against the basis.
    MatrixXd B(2 * m.ambient_dim * m.ambient_dim, K);
    for (long k = 0; k < K; ++k) B.col(k) = real_vec(m.rho[k]);
    Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(B);
    for (long i = 0; i < K; ++i)
        for (long j = i + 1; j < K; ++j) {
            VectorXd b = real_vec(m.rho[i] * m.rho[j] - m.rho[j] * m.rho[i]);
            double res = (B * cod.solve(b) - b).norm() /
                         std::max(1.0, b.norm());
            m.closure_residual = std::max(m.closure_residual, res);
        }
    if (m.closure_residual > kClosureTol)
        throw std::runtime_error(m.case_name +
                                 ": basis is not closed under brackets");
}

}  // namespace

MatrixModel build_model(const std::string& case_name,
                        const std::vector<int>& params) {
    MatrixModel m;
    m.case_name = case_name;
    m.params = params;
    if (case_name == "Veronese") {
        if (params.size() != 1 || params[0] < 1)
            throw std::invalid_argument("Veronese needs one parameter n >= 1");
        int n = params[0], w = n + 1;
        MatrixXcd S = square_isometry(w, true);
        m.ambient_dim = S.cols();
        for (const auto& X : u_basis(w)) {
            MatrixXcd big = Eigen::kroneckerProduct(
                                X, MatrixXcd::Identity(w, w)).eval() +
                            Eigen::kroneckerProduct(
                                MatrixXcd::Identity(w, w), X).eval();
            m.rho.push_back(S.adjoint() * big * S);
        }
        m.v = VectorXcd::Zero(m.ambient_dim);
        m.v(0) = 1;  // e1.e1: first column of the isometry
        m.expected_orbit_dim = n;
    } else if (case_name == "Pluecker") {
        if (params.size() != 1 || params[0] < 4)
            throw std::invalid_argument("Pluecker needs one parameter n >= 4");
        int n = params[0];
        MatrixXcd S = square_isometry(n, false);
        m.ambient_dim = S.cols();
        for (const auto& X : u_basis(n)) {
            MatrixXcd big = Eigen::kroneckerProduct(
                                X, MatrixXcd::Identity(n, n)).eval() +
                            Eigen::kroneckerProduct(
                                MatrixXcd::Identity(n, n), X).eval();
            m.rho.push_back(S.adjoint() * big * S);
        }
        m.v = VectorXcd::Zero(m.ambient_dim);
        m.v(0) = 1;  // e1^e2: the pairs are ordered (1,2) first
        m.expected_orbit_dim = 2 * (n - 2);
    } else if (case_name == "Segre") {
        if (params.size() != 2 || params[0] < 2 || params[1] < 2)
            throw std::invalid_argument("Segre needs parameters a, b >= 2");
        int a = params[0], b = params[1];
        m.ambient_dim = long(a) * b;
        for (const auto& X : su_basis(a))
            m.rho.push_back(Eigen::kroneckerProduct(
                X, MatrixXcd::Identity(b, b)).eval());
        for (const auto& Y : su_basis(b))
            m.rho.push_back(Eigen::kroneckerProduct(
                MatrixXcd::Identity(a, a), Y).eval());
        m.rho.push_back(I * MatrixXcd::Identity(m.ambient_dim, m.ambient_dim));
        m.v = VectorXcd::Zero(m.ambient_dim);
        m.v(0) = 1;  // e1 (x) e1
        m.expected_orbit_dim = a + b - 2;
    } else if (case_name == "Quadric") {
        if (params.size() != 1 || params[0] < 3)
            throw std::invalid_argument("Quadric needs one parameter n >= 3");
        int n = params[0];
        m.ambient_dim = n;
        m.rho = so_basis(n);
        m.rho.push_back(I * MatrixXcd::Identity(n, n));
        m.v = VectorXcd::Zero(n);
        m.v(0) = 1.0 / std::sqrt(2.0);
        m.v(1) = I / std::sqrt(2.0);
        m.expected_orbit_dim = n - 2;
    } else {
        throw std::invalid_argument("unknown model case: " + case_name);
    }
    run_construction_checks(m);
    return m;
}

Decomposition decompose(const MatrixModel& m) {
    const long D = m.ambient_dim, K = m.rho.size();
    Decomposition d;
    MatrixXcd P = MatrixXcd::Identity(D, D) - m.v * m.v.adjoint();

    MatrixXcd tangent(D, K);
    for (long k = 0; k < K; ++k) tangent.col(k) = P * (m.rho[k] * m.v);
    d.t_basis = col_span(tangent);
    if (d.t_basis.cols() != m.expected_orbit_dim)
        throw std::runtime_error(m.case_name + ": tangent space has dim " +
                                 std::to_string(d.t_basis.cols()) +
                                 ", expected " +
                                 std::to_string(m.expected_orbit_dim));

    // Stabilizer of the line Cv: real kernel of X |-> P rho(X) v.
    MatrixXd A(2 * D, K);
    for (long k = 0; k < K; ++k) A.col(k) = real_vec(tangent.col(k));
    std::tie(d.k0_coords, d.k0_residual) = real_kernel(A);
    if (d.k0_residual > kNullTol)
        throw std::runtime_error(m.case_name +
                                 ": ambiguous stabilizer null space");
    if (d.k0_coords.cols() != K - 2 * m.expected_orbit_dim)
        throw std::runtime_error(m.case_name + ": stabilizer has dim " +
                                 std::to_string(d.k0_coords.cols()) +
                                 ", expected " +
                                 std::to_string(K - 2 * m.expected_orbit_dim));

    // N = (Cv + T)^perp, from the full unitary factor of [v | T].
    MatrixXcd VT(D, 1 + d.t_basis.cols());
    VT.col(0) = m.v;
    VT.rightCols(d.t_basis.cols()) = d.t_basis;
    Eigen::JacobiSVD<MatrixXcd> svd(VT, Eigen::ComputeFullU);
    d.n_basis = svd.matrixU().rightCols(D - VT.cols());

    // First normal space: N-components of the second derivatives.
    MatrixXcd Pn = d.n_basis * d.n_basis.adjoint();
    MatrixXcd second(D, K * K);
    for (long i = 0; i < K; ++i)
        for (long j = 0; j < K; ++j)
            second.col(i * K + j) = Pn * (m.rho[i] * (m.rho[j] * m.v));
    d.n1_basis = col_span(second);

    // Trace-form complement of k_0.
    MatrixXd G(K, K);
    for (long i = 0; i < K; ++i)
        for (long j = 0; j < K; ++j)
            G(i, j) = -(m.rho[i] * m.rho[j]).trace().real();
    d.m_coords = real_kernel(d.k0_coords.transpose() * G).first;
    return d;
}

CheckResult fullness_check(const MatrixModel&, const Decomposition& d) {
    MatrixXcd diff = d.n1_basis * d.n1_basis.adjoint() -
                     d.n_basis * d.n_basis.adjoint();
    CheckResult r;
    Eigen::JacobiSVD<MatrixXcd> svd(diff);
    r.residual = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    r.ok = r.residual < kCertTol;
    return r;
}

CheckResult bracket_check(const MatrixModel& m, const Decomposition& d) {
    CheckResult r;
    for (long j = 0; j < d.m_coords.cols(); ++j) {
        MatrixXcd X = combine(m.rho, d.m_coords.col(j));
        // N-component of rho(X) w for every w in the N basis, at once.
        double res = (d.n_basis.adjoint() * (X * d.n_basis)).cwiseAbs()
                         .maxCoeff();
        r.residual = std::max(r.residual, res);
    }
    r.ok = r.residual < kCertTol;
    return r;
}

long slice_commutant_dim(const MatrixModel& m, const Decomposition& d) {
    auto S = slice_matrices(m, d);
    const long n = d.n_basis.cols();
    if (n == 0) return 0;
    MatrixXcd Id = MatrixXcd::Identity(n, n);
    // [A, S] = 0 for all S, as a complex-linear system on vec(A); count
    // the kernel through the (n^2 x n^2) normal matrix.
    MatrixXcd Gram = MatrixXcd::Zero(n * n, n * n);
    for (const auto& Sx : S) {
        MatrixXcd L =
            Eigen::kroneckerProduct(Id, Sx).eval() -
            Eigen::kroneckerProduct(Sx.transpose(), Id).eval();
        Gram += L.adjoint() * L;
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(Gram);
    const VectorXd& ev = es.eigenvalues();
    double cut = 1e-10 * std::max(1.0, ev(ev.size() - 1));
    long null = 0;
    for (long i = 0; i < ev.size(); ++i)
        if (ev(i) <= cut) ++null;
    return null;
}

long effective_slice_dim(const MatrixModel& m, const Decomposition& d) {
    auto S = slice_matrices(m, d);
    const long K0 = S.size();
    if (K0 == 0) return 0;
    MatrixXd A(2 * d.n_basis.cols() * d.n_basis.cols(), K0);
    for (long j = 0; j < K0; ++j) A.col(j) = real_vec(S[j]);
    return K0 - real_kernel(A).first.cols();
}

OrbitReport orbit_report(const MatrixModel& m) {
    Decomposition d = decompose(m);
    OrbitReport r;
    r.model = m.case_name;
    for (size_t i = 0; i < m.params.size(); ++i)
        r.model += (i ? "," : "(") + std::to_string(m.params[i]);
    r.model += ")";
    r.dim_t = d.t_basis.cols();
    r.dim_n = d.n_basis.cols();
    r.dim_n1 = d.n1_basis.cols();
    r.dim_k_real = m.rho.size();
    r.dim_k0_real = d.k0_coords.cols();
    auto f = fullness_check(m, d);
    r.fullness = f.ok;
    r.fullness_residual = f.residual;
    auto b = bracket_check(m, d);
    r.bracket_ok = b.ok;
    r.bracket_residual = b.residual;
    r.commutant_dim = slice_commutant_dim(m, d);
    r.slice_irreducible = r.commutant_dim == 1;
    r.effective_dim = effective_slice_dim(m, d);
    r.k0_residual = d.k0_residual;
    r.antiherm_residual = m.antiherm_residual;
    r.closure_residual = m.closure_residual;
    return r;
}

}  // namespace parhol
