#pragma once

#include <gmpxx.h>

#include <vector>

#include "qrr/hall_littlewood.hpp"
#include "qrr/quadform.hpp"
#include "qrr/rational.hpp"
#include "qrr/series.hpp"

namespace qrr {

// -------------------------------------------------------------------------
// weighted lattice sums over shifted residue classes (the "bosonic" sides)
// -------------------------------------------------------------------------

enum class WeightKind { xi, chi, trivial };
enum class SignRule { none, parity_diff, parity_diff_over_modulus };

/// One parametrization covering every lattice-sum right-hand side: enumerate
/// v = base + modulus * t over t in Z^n, weight each point by xi/chi relative
/// to weight_ref, apply the sign rule, and attach the normalized exponent
/// (|v|^2 - |base|^2) / exp_denom, which must land on the nonnegative
/// integers (hard assertion).
struct BosonicSpec {
    long long dimension = 1;
    long long modulus = 1;
    bool half_integer_lattice = false;  // v on (Z + 1/2)^n instead of Z^n
    std::vector<Rational> base;
    WeightKind weight = WeightKind::trivial;
    std::vector<Rational> weight_ref;
    SignRule sign_rule = SignRule::none;
    long long exp_denom = 1;
    int bound_scale = 1;  // test knob: inflate the enumeration box

    void validate() const;
};

/// xi(v/w) = prod_{i<j} (v_i^2 - v_j^2) / (w_i^2 - w_j^2); exact, and zero
/// when v has coinciding squares.
mpq_class xi_weight(const std::vector<mpq_class>& v, const std::vector<mpq_class>& w);

/// chi(v/w) = prod_i v_i/w_i * xi(v/w); zero when some v_i = 0 as well.
mpq_class chi_weight(const std::vector<mpq_class>& v, const std::vector<mpq_class>& w);

Series bosonic_sum(const BosonicSpec& spec, const Rational& order);

// -------------------------------------------------------------------------
// quadratic-form multi-sums (the "fermionic" sides)
// -------------------------------------------------------------------------

enum class LinearSign {
    alternating_first_plus,   // (-1)^{a-1}: +,-,+,... across the Cartan index
    alternating_first_minus,  // (-1)^a
};
enum class LastColumn { standard, even };

/// sum over m in N^{(N-1)(k-1)} of q^{(1/2) m B m^T + linear} / prod (q)_m
/// with B the Cartan-Kronecker form; `even` swaps the i = k-1 denominators
/// for (q^2;q^2)_m, and at k = 1 the even convention contributes the factor
/// (q;q^2)_infinity per Cartan node.
struct FermionicSpec {
    long long N = 2;
    long long k = 2;
    long long p = 2;  // linear term runs over columns p..k-1
    LinearSign linear_sign = LinearSign::alternating_first_plus;
    LastColumn last_column = LastColumn::standard;
    int bound_scale = 1;

    void validate() const;
};

Series fermionic_sum(const FermionicSpec& spec, const Rational& order);

// -------------------------------------------------------------------------
// Hall-Littlewood-style partition-tuple sums
// -------------------------------------------------------------------------

/// sum over (N-1)-tuples of partitions with parts <= k-1 of
/// q^{(1/2) sum C_ab (l^a|l^b)} prod_a z_a^{|l^a|} / b_{l^a}(q), with z = 1
/// for p = k and z alternating q, q^{-1} for p = 1. Same value as
/// fermionic_sum for matching parameters, through an independent
/// parametrization.
Series hl_form_sum(long long N, long long k, long long p, const Rational& order);

/// prod over the positive roots of A_{N-1} of 1/(z^alpha q; q)_infinity at
/// z_a = q^{c_a}; every root exponent 1 + sum c must be positive.
Series hua_product(long long N, const std::vector<Rational>& z_exponents, const Rational& order);

/// Same summand as hl_form_sum but over unrestricted partition tuples, with
/// a largest-part cutoff provably sufficient for the requested order.
Series hua_lhs(long long N, const std::vector<Rational>& z_exponents, const Rational& order);

// -------------------------------------------------------------------------
// modified Hall-Littlewood generating sums and the Milne identity sides
// -------------------------------------------------------------------------

enum class QprimeVariant {
    plain,        // sum_m q^m /(q)_m Q'_{(2^m)}(1^n)
    alternating,  // sum_m q^{2m}/(q)_m Q'_{(2^m)}(1, q^{-1}, 1, ...)
};

Series qprime_weighted_sum(long long n, QprimeVariant variant, const Rational& order);

/// C_n Rogers-Selberg lattice side at x_i = q^{sigma_i}: the u-sum over N^n
/// with the C_n Vandermonde ratio evaluated by exact factor cancellation.
Series milne_lhs(long long n, const std::vector<Rational>& sigma, const Rational& order);

/// Pochhammer prefactor times sum_m q^m/(q)_m Q'_{(2^m)}(q^{sigma}).
Series milne_rhs(long long n, const std::vector<Rational>& sigma, const Rational& order);

// -------------------------------------------------------------------------
// reference vectors shared by the identity catalog
// -------------------------------------------------------------------------

std::vector<Rational> rho_half(long long n);   // (1/2, 3/2, ..., n-1/2)
std::vector<Rational> rho_star(long long n);   // (1, 2, ..., n)
std::vector<Rational> rho_marked(long long n); // (0, 1, ..., n-1)
std::vector<Rational> shifted_by(std::vector<Rational> v, const Rational& a);

} // namespace qrr
