#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrr/rational.hpp"

namespace qrr {

/// Truncated Puiseux series in q with exact integer coefficients.
///
/// A series lives on the uniform exponent grid {(offset + i) / denom} and
/// carries a truncation order: every coefficient at an exponent <= order is
/// the true coefficient of the represented infinite object, and exponents
/// beyond the order are untracked. A series without an order is an exact
/// (Laurent) polynomial, known at every exponent. The order bound is
/// inclusive.
///
/// Values are immutable after construction; all operations are pure and the
/// type is safe to share across threads.
class Series {
public:
    /// The identically-zero polynomial.
    Series() = default;

    /// Zero up to (and including) `order`, unknown beyond.
    static Series zero(const Rational& order);
    static Series constant(mpz_class c);
    static Series one() { return constant(1); }
    /// c * q^e as an exact polynomial.
    static Series monomial(mpz_class c, const Rational& e);
    /// c * q^e tracked up to `order`.
    static Series monomial(mpz_class c, const Rational& e, const Rational& order);
    /// Build from grid data: coefficient of q^{(offset+i)/denom} is coeffs[i].
    static Series from_grid(long long denom, long long offset, std::vector<mpz_class> coeffs,
                            std::optional<Rational> order);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_polynomial() const { return !order_.has_value(); }
    const std::optional<Rational>& order() const { return order_; }
    long long grid_denom() const { return denom_; }

    /// Lowest / highest exponent carrying a nonzero coefficient.
    Rational min_exponent() const;
    Rational max_exponent() const;

    /// Coefficient at exponent e. Throws std::out_of_range past the order.
    mpz_class coeff(const Rational& e) const;
    /// Convenience accessor for integer exponents.
    mpz_class coeff(long long e) const { return coeff(Rational(e)); }

    /// True when every nonzero coefficient sits on an integer exponent.
    bool integral_grid() const;

    std::vector<std::pair<Rational, mpz_class>> terms() const;

    Series truncated(const Rational& order) const;
    Series shifted(const Rational& e) const;  // multiply by q^e
    Series inverse() const;                   // leading coefficient must be +-1
    Series pow(long long e) const;
    Series normalized() const;                // minimal grid denominator

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const;

    /// Structural equality on normalized form (grid, coefficients and order).
    bool operator==(const Series& o) const;

    std::string str(size_t max_terms = 12) const;

    struct Mismatch {
        Rational exponent;
        mpz_class lhs, rhs;
    };
    /// First grid exponent <= bound (and within both orders) where the two
    /// series differ, or nullopt when they agree on that whole range.
    static std::optional<Mismatch> first_mismatch(const Series& f, const Series& g,
                                                  const Rational& bound);
    /// The exponent range over which first_mismatch actually compares.
    static Rational effective_bound(const Series& f, const Series& g, const Rational& bound);
    static bool agree_to(const Series& f, const Series& g, const Rational& bound) {
        return !first_mismatch(f, g, bound).has_value();
    }

private:
    long long denom_ = 1;
    long long offset_ = 0;  // exponent of coeffs_[0] is offset_/denom_
    std::vector<mpz_class> coeffs_;
    std::optional<Rational> order_;

    Series(long long d, long long off, std::vector<mpz_class> c, std::optional<Rational> ord)
        : denom_(d), offset_(off), coeffs_(std::move(c)), order_(std::move(ord)) {
        trim();
    }

    void trim();
    Series rescaled(long long new_denom) const;
    // grid index of the truncation cut (inclusive), relative to offset
    static long long cut_index(long long denom, long long offset, const Rational& order);
};

} // namespace qrr
