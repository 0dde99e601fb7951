#pragma once

#include <utility>
#include <vector>

namespace qrr {

/// Rogers dilogarithm L(x) on [0,1], with L(0) = 0 and L(1) = pi^2/6 exact by
/// convention; absolute error below 1e-13 in between. Throws
/// std::domain_error outside [0,1].
double rogers_dilog(double x);

/// Both sides of the A-type dilogarithm identity
///   (1/L(1)) sum_{a<N, i<K} L(sin(a pi/kappa) sin((N-a) pi/kappa) /
///                            (sin((i+a) pi/kappa) sin((i+N-a) pi/kappa)))
///     = (N^2-1)(K-1)/(K+N-1),   kappa = K+N-1.
std::pair<double, double> kirillov_check(int K, int N);

/// The reduced even-K identity: lhs sums over i <= k-1 with kappa = 2k+N-1
/// and rhs = N(N-1)(k-1)/(2k+N-1). Also verifies the summand symmetry
/// S(2k,N;a,i) = S(2k,N;a,2k-i-1) numerically (consistency_error on failure).
std::pair<double, double> kirillov_even_check(int k, int N);

/// Algebraic fixed-point system f_i^(a) = prod_{b,j} (1-f_j^(b))^{C_ab min(i,j)}
/// solved by damped iteration from f = 1/2.
struct DilogSystem {
    int N = 2, k = 2;
    std::vector<std::vector<double>> f;  // f[a-1][i-1], values in (0,1)
    bool converged = false;
    int iterations = 0;
    double residual = 0;  // max |f - Phi(f)| at the returned point
};

DilogSystem tba_solve(int N, int k);

/// Closed-form candidate f_i^(a) = sin(a pi/kappa) sin((N-a) pi/kappa) /
/// (sin((i+a) pi/kappa) sin((i+N-a) pi/kappa)), kappa = 2k+N-1.
std::vector<std::vector<double>> tba_closed_form(int N, int k);

/// max componentwise defect of `f` in the defining fixed-point system.
double tba_system_residual(int N, int k, const std::vector<std::vector<double>>& f);

} // namespace qrr
