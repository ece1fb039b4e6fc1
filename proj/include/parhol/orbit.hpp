#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace parhol {

// Explicit unitarized representation with highest weight vector:
//   Veronese(n):  V = Sym^2 C^{n+1}, k = u(n+1),        v = e1.e1
//   Segre(a,b):   V = C^a (x) C^b,   k = su(a)+su(b)+R, v = e1(x)e1
//   Pluecker(n):  V = Wedge^2 C^n,   k = u(n),          v = e1^e2
//   Quadric(n):   V = C^n,           k = so(n)+so(2),   v = (e1+i e2)/sqrt2
// rho holds the (anti-Hermitian) images of a basis of k on V.
struct MatrixModel {
    std::string case_name;
    std::vector<int> params;
    long ambient_dim = 0;                // dim_C V
    std::vector<Eigen::MatrixXcd> rho;   // basis of the image of k
    Eigen::VectorXcd v;                  // unit highest weight vector
    long expected_orbit_dim = 0;         // dim_C of the K-orbit of [v]
    double antiherm_residual = 0;        // construction check, < 1e-12
    double closure_residual = 0;         // [k,k] in k, < 1e-10
};

MatrixModel build_model(const std::string& case_name,
                        const std::vector<int>& params);

// Orthogonal decomposition V = Cv + T + N at the highest weight vector,
// first normal space N^1, stabilizer k_0 = {X : rho(X) v in Cv} and its
// trace-form complement m.
struct Decomposition {
    Eigen::MatrixXcd t_basis;    // orthonormal, spans T
    Eigen::MatrixXcd n_basis;    // spans N
    Eigen::MatrixXcd n1_basis;   // spans N^1 (subspace of N)
    Eigen::MatrixXd k0_coords;   // columns: k-basis coefficients spanning k_0
    Eigen::MatrixXd m_coords;    // trace-form complement of k_0 in k
    double k0_residual = 0;      // null-space determination residual
};

Decomposition decompose(const MatrixModel& m);

struct CheckResult {
    bool ok = false;
    double residual = 0;
};

// N^1 = N as subspaces (projector-difference operator norm < 1e-9).
CheckResult fullness_check(const MatrixModel& m, const Decomposition& d);

// rho(m) N is contained in Cv + T: max over basis pairs of the norm of the
// N-component of rho(X) w.
CheckResult bracket_check(const MatrixModel& m, const Decomposition& d);

// Complex dimension of {A : [A, S_X] = 0 for all X in k_0}, where S_X is
// the slice action of X on N (1 = irreducible).
long slice_commutant_dim(const MatrixModel& m, const Decomposition& d);

// Real dimension of the image of k_0 in its slice action on N (the
// effective algebra of the slice representation).
long effective_slice_dim(const MatrixModel& m, const Decomposition& d);

struct OrbitReport {
    std::string model;
    long dim_t = 0;        // complex dims
    long dim_n1 = 0;
    long dim_n = 0;
    long dim_k_real = 0;
    long dim_k0_real = 0;
    bool fullness = false;
    bool bracket_ok = false;
    bool slice_irreducible = false;
    long commutant_dim = 0;
    long effective_dim = 0;
    double fullness_residual = 0;
    double bracket_residual = 0;
    double k0_residual = 0;
    double antiherm_residual = 0;
    double closure_residual = 0;
};

OrbitReport orbit_report(const MatrixModel& m);

}  // namespace parhol
