#include "qrr/dilog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qrr/errors.hpp"

namespace qrr {

namespace {

const double PI = 3.141592653589793238462643383279502884;

// Li2 by series for x <= 1/2, Euler reflection above
double dilog_li2(double x) {
    if (x > 0.5) return PI * PI / 6 - std::log(x) * std::log(1 - x) - dilog_li2(1 - x);
    double term = x, sum = x;
    for (int k = 2; k < 200; ++k) {
        term *= x;
        double add = term / ((double)k * k);
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum) + 1e-300) break;
    }
    return sum;
}

double ipow(double base, long long e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    double acc = 1, b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        e >>= 1;
        b *= b;
    }
    return acc;
}

double kirillov_arg(int kappa, int N, int a, int i) {
    double s = std::sin(a * PI / kappa) * std::sin((N - a) * PI / kappa);
    double t = std::sin((i + a) * PI / kappa) * std::sin((i + N - a) * PI / kappa);
    return s / t;
}

} // namespace

double rogers_dilog(double x) {
    if (x < 0 || x > 1) throw std::domain_error("rogers_dilog: argument outside [0,1]");
    if (x == 0) return 0;
    if (x == 1) return PI * PI / 6;
    return dilog_li2(x) + 0.5 * std::log(x) * std::log(1 - x);
}

std::pair<double, double> kirillov_check(int K, int N) {
    double L1 = PI * PI / 6;
    int kappa = K + N - 1;
    double lhs = 0;
    for (int a = 1; a <= N - 1; ++a)
        for (int i = 1; i <= K - 1; ++i) {
            double arg = kirillov_arg(kappa, N, a, i);
            if (!(arg > 0 && arg <= 1 + 1e-12))
                throw consistency_error("kirillov_check: sine-ratio argument outside (0,1]");
            lhs += rogers_dilog(std::min(arg, 1.0));
        }
    lhs /= L1;
    double rhs = (double)((N * N - 1) * (K - 1)) / (K + N - 1);
    return {lhs, rhs};
}

std::pair<double, double> kirillov_even_check(int k, int N) {
    double L1 = PI * PI / 6;
    int kappa = 2 * k + N - 1;
    double lhs = 0;
    for (int a = 1; a <= N - 1; ++a)
        for (int i = 1; i <= k - 1; ++i) {
            double arg = kirillov_arg(kappa, N, a, i);
            // summand symmetry S(2k,N;a,i) = S(2k,N;a,2k-i-1)
            double mirror = kirillov_arg(kappa, N, a, 2 * k - i - 1);
            if (std::fabs(arg - mirror) > 1e-10) {
                std::ostringstream os;
                os << "kirillov_even_check: summand symmetry violated at a=" << a << " i=" << i;
                throw consistency_error(os.str());
            }
            if (!(arg > 0 && arg <= 1 + 1e-12))
                throw consistency_error("kirillov_even_check: argument outside (0,1]");
            lhs += rogers_dilog(std::min(arg, 1.0));
        }
    lhs /= L1;
    double rhs = (double)(N * (N - 1) * (k - 1)) / (2 * k + N - 1);
    return {lhs, rhs};
}

std::vector<std::vector<double>> tba_closed_form(int N, int k) {
    int kappa = 2 * k + N - 1;
    std::vector<std::vector<double>> f(N - 1, std::vector<double>(k - 1));
    for (int a = 1; a <= N - 1; ++a)
        for (int i = 1; i <= k - 1; ++i) f[a - 1][i - 1] = kirillov_arg(kappa, N, a, i);
    return f;
}

namespace {

std::vector<std::vector<double>> tba_map(int N, int k,
                                         const std::vector<std::vector<double>>& f) {
    std::vector<std::vector<double>> g(N - 1, std::vector<double>(k - 1));
    for (int a = 1; a <= N - 1; ++a)
        for (int i = 1; i <= k - 1; ++i) {
            double prod = 1;
            for (int b = 1; b <= N - 1; ++b) {
                long long cab = (a == b) ? 2 : (std::abs(a - b) == 1 ? -1 : 0);
                if (cab == 0) continue;
                for (int j = 1; j <= k - 1; ++j)
                    prod *= ipow(1 - f[b - 1][j - 1], cab * std::min(i, j));
            }
            g[a - 1][i - 1] = prod;
        }
    return g;
}

} // namespace

double tba_system_residual(int N, int k, const std::vector<std::vector<double>>& f) {
    auto g = tba_map(N, k, f);
    double r = 0;
    for (int a = 0; a < N - 1; ++a)
        for (int i = 0; i < k - 1; ++i) r = std::max(r, std::fabs(f[a][i] - g[a][i]));
    return r;
}

DilogSystem tba_solve(int N, int k) {
    if (N < 2 || k < 2) throw std::invalid_argument("tba_solve: need N >= 2 and k >= 2");
    DilogSystem sys;
    sys.N = N;
    sys.k = k;

    // Damped fixed-point iteration on u = log f, where the system reads
    // u_i = sum_j B_ij log(1 - e^{u_j}). Updates in f-space blow up once a
    // component gets close to 1 (the negative Cartan exponents see 1-f -> 0),
    // while the log-space map with a backtracking step is stable from 1/2.
    int d = (N - 1) * (k - 1);
    std::vector<double> u(d, std::log(0.5));
    auto psi = [&](const std::vector<double>& uu) {
        std::vector<double> out(d, 0.0);
        for (int a = 1; a <= N - 1; ++a)
            for (int i = 1; i <= k - 1; ++i) {
                double s = 0;
                for (int b = 1; b <= N - 1; ++b) {
                    long long cab = (a == b) ? 2 : (std::abs(a - b) == 1 ? -1 : 0);
                    if (cab == 0) continue;
                    for (int j = 1; j <= k - 1; ++j)
                        s += (double)(cab * std::min(i, j)) *
                             std::log1p(-std::exp(uu[(b - 1) * (k - 1) + (j - 1)]));
                }
                out[(a - 1) * (k - 1) + (i - 1)] = s;
            }
        return out;
    };
    auto resid = [&](const std::vector<double>& uu) {
        auto p = psi(uu);
        double r = 0;
        for (int t = 0; t < d; ++t) r = std::max(r, std::fabs(p[t] - uu[t]));
        return r;
    };

    const int budget = 20000;
    double r = resid(u);
    for (int it = 1; it <= budget && r > 1e-15; ++it) {
        auto p = psi(u);
        double alpha = 0.5;
        bool moved = false;
        while (alpha > 1e-14) {
            std::vector<double> cand(d);
            bool ok = true;
            for (int t = 0; t < d; ++t) {
                cand[t] = u[t] + alpha * (p[t] - u[t]);
                if (cand[t] >= -1e-15 || cand[t] < -700) ok = false;  // keep f in (0,1)
            }
            if (ok) {
                double rc = resid(cand);
                if (rc < r) {
                    u = std::move(cand);
                    r = rc;
                    moved = true;
                    break;
                }
            }
            alpha /= 2;
        }
        sys.iterations = it;
        if (!moved) break;  // stalled; report whatever residual remains
    }

    sys.f.assign(N - 1, std::vector<double>(k - 1));
    for (int a = 0; a < N - 1; ++a)
        for (int i = 0; i < k - 1; ++i) sys.f[a][i] = std::exp(u[a * (k - 1) + i]);
    sys.residual = tba_system_residual(N, k, sys.f);
    sys.converged = sys.residual < 1e-12;
    return sys;
}

} // namespace qrr
