#pragma once

#include <gmpxx.h>

#include <vector>

#include "qrr/rational.hpp"

namespace qrr {

/// Cartan matrix of A_rank (rank x rank, 2 on the diagonal, -1 off it).
std::vector<std::vector<long long>> cartan_matrix(long long rank);

/// Integer symmetric positive definite quadratic form. Positive definiteness
/// is certified exactly at construction (rational LDL^T pivots), and a
/// rational lower bound on the smallest eigenvalue is certified by bisection
/// with the same test on B - x*I; both are used to derive sound enumeration
/// boxes for the lattice sums.
class QuadraticForm {
public:
    explicit QuadraticForm(std::vector<std::vector<long long>> entries);

    /// B = C(A_{N-1}) (x) T^{-1} with (T^{-1})_{ij} = min(i,j); the
    /// d = (N-1)(k-1) dimensional form behind the multi-sum left-hand sides.
    /// Index layout: (a,i) -> (a-1)*(k-1) + (i-1).
    static QuadraticForm kronecker_cartan(long long N, long long k);

    long long dim() const { return (long long)entries_.size(); }
    const std::vector<std::vector<long long>>& entries() const { return entries_; }

    /// Certified rational 0 < bound < lambda_min(B).
    const Rational& min_eigenvalue_bound() const { return lambda_lb_; }

    /// (1/2) m B m^T + linear . m for an integer vector.
    long long evaluate(const std::vector<long long>& m,
                       const std::vector<long long>& linear) const;

private:
    std::vector<std::vector<long long>> entries_;
    Rational lambda_lb_;
};

/// True when M - shift*I is positive definite (exact rational pivots).
bool is_positive_definite_shifted(const std::vector<std::vector<long long>>& m,
                                  const Rational& shift);

/// Exact inverse of a symmetric positive definite rational matrix.
std::vector<std::vector<mpq_class>> invert_spd(const std::vector<std::vector<mpq_class>>& m);

} // namespace qrr
