#include "qrr/quadform.hpp"

#include <stdexcept>

#include "qrr/errors.hpp"

namespace qrr {

std::vector<std::vector<long long>> cartan_matrix(long long rank) {
    if (rank < 1) throw std::invalid_argument("cartan_matrix: rank must be >= 1");
    std::vector<std::vector<long long>> c(rank, std::vector<long long>(rank, 0));
    for (long long i = 0; i < rank; ++i) {
        c[i][i] = 2;
        if (i + 1 < rank) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
}

bool is_positive_definite_shifted(const std::vector<std::vector<long long>>& m,
                                  const Rational& shift) {
    size_t d = m.size();
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d));
    mpq_class s((long)shift.num(), (long)shift.den());
    s.canonicalize();
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            a[i][j] = (long)m[i][j];
            if (i == j) a[i][j] -= s;
        }
    // symmetric Gaussian elimination; all pivots positive iff positive definite
    for (size_t p = 0; p < d; ++p) {
        if (a[p][p] <= 0) return false;
        for (size_t i = p + 1; i < d; ++i) {
            mpq_class f = a[i][p] / a[p][p];
            if (f == 0) continue;
            for (size_t j = p; j < d; ++j) a[i][j] -= f * a[p][j];
        }
    }
    return true;
}

std::vector<std::vector<mpq_class>> invert_spd(const std::vector<std::vector<mpq_class>>& m) {
    size_t d = m.size();
    std::vector<std::vector<mpq_class>> a(m), inv(d, std::vector<mpq_class>(d, 0));
    for (size_t i = 0; i < d; ++i) inv[i][i] = 1;
    for (size_t p = 0; p < d; ++p) {
        if (a[p][p] == 0) throw std::invalid_argument("invert_spd: zero pivot");
        mpq_class piv = a[p][p];
        for (size_t j = 0; j < d; ++j) {
            a[p][j] /= piv;
            inv[p][j] /= piv;
        }
        for (size_t i = 0; i < d; ++i) {
            if (i == p || a[i][p] == 0) continue;
            mpq_class f = a[i][p];
            for (size_t j = 0; j < d; ++j) {
                a[i][j] -= f * a[p][j];
                inv[i][j] -= f * inv[p][j];
            }
        }
    }
    return inv;
}

QuadraticForm::QuadraticForm(std::vector<std::vector<long long>> entries)
    : entries_(std::move(entries)) {
    size_t d = entries_.size();
    if (d == 0) {
        lambda_lb_ = Rational(1);
        return;
    }
    for (size_t i = 0; i < d; ++i) {
        if (entries_[i].size() != d)
            throw std::invalid_argument("QuadraticForm: matrix must be square");
        for (size_t j = 0; j < d; ++j)
            if (entries_[i][j] != entries_[j][i])
                throw std::invalid_argument("QuadraticForm: matrix must be symmetric");
    }
    if (!is_positive_definite_shifted(entries_, Rational(0)))
        throw std::invalid_argument("QuadraticForm: matrix is not positive definite");

    // certified lower bound on the least eigenvalue: bisect on x with the
    // exact test "B - xI positive definite", which implies lambda_min > x
    long long min_diag = entries_[0][0];
    for (size_t i = 0; i < d; ++i) min_diag = std::min(min_diag, entries_[i][i]);
    Rational lo(0), hi(min_diag);  // lambda_min <= min diagonal entry
    for (int it = 0; it < 24; ++it) {
        Rational mid = (lo + hi) * Rational(1, 2);
        if (is_positive_definite_shifted(entries_, mid))
            lo = mid;
        else
            hi = mid;
    }
    if (lo.is_zero())
        throw consistency_error("QuadraticForm: could not certify a positive eigenvalue bound");
    // coarsen to a small denominator so downstream budget arithmetic stays in
    // 64-bit range; any positive rational below lambda_min certifies
    long long coarse = lo.floor_times(4096);
    lambda_lb_ = coarse > 0 ? Rational(coarse, 4096) : lo;
}

QuadraticForm QuadraticForm::kronecker_cartan(long long N, long long k) {
    if (N < 2 || k < 1) throw std::invalid_argument("kronecker_cartan: need N >= 2, k >= 1");
    long long rank = N - 1, cols = k - 1;
    long long d = rank * cols;
    auto c = cartan_matrix(rank);
    std::vector<std::vector<long long>> b(d, std::vector<long long>(d, 0));
    for (long long a = 0; a < rank; ++a)
        for (long long i = 0; i < cols; ++i)
            for (long long bb = 0; bb < rank; ++bb)
                for (long long j = 0; j < cols; ++j)
                    b[a * cols + i][bb * cols + j] = c[a][bb] * std::min(i + 1, j + 1);
    if (d == 0) return QuadraticForm(std::vector<std::vector<long long>>{});
    return QuadraticForm(std::move(b));
}

long long QuadraticForm::evaluate(const std::vector<long long>& m,
                                  const std::vector<long long>& linear) const {
    long long d = dim();
    long long quad = 0, lin = 0;
    for (long long i = 0; i < d; ++i) {
        if (m[i] == 0) continue;
        quad += entries_[i][i] * m[i] * m[i];
        for (long long j = i + 1; j < d; ++j) quad += 2 * entries_[i][j] * m[i] * m[j];
        lin += linear[i] * m[i];
    }
    if (quad % 2 != 0)
        throw consistency_error("QuadraticForm::evaluate: odd diagonal made a half-integer");
    return quad / 2 + lin;
}

} // namespace qrr
