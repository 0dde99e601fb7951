#pragma once

#include <vector>

#include "qrr/partition.hpp"
#include "qrr/rational.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// A finite alphabet of q-power variables: x_i = q^{exponents[i]}.
/// (0,...,0) is the all-ones alphabet, (0,-1,0,-1,...) the alternating
/// 1, q^{-1}, ... alphabet used by the even-weight sums.
struct AlphabetSpec {
    std::vector<Rational> exponents;

    static AlphabetSpec ones(long long n) { return {std::vector<Rational>(n, Rational(0))}; }
    static AlphabetSpec alternating(long long n) {
        std::vector<Rational> e(n, Rational(0));
        for (long long i = 1; i < n; i += 2) e[i] = Rational(-1);
        return {std::move(e)};
    }
};

/// Skew modified Hall-Littlewood value Q'_{lambda/mu}(1) as an exact
/// polynomial in q, zero when mu is not contained in lambda. Both closed
/// forms (the hook-style product over the parts of mu, and the q-binomial
/// column product) are evaluated and compared; any disagreement raises a
/// consistency_error.
Series skew_qprime_one(const Partition& lambda, const Partition& mu);

/// Q'_{(2^m)}(q^{sigma_1},...,q^{sigma_n}) truncated at `order`, evaluated by
/// the chain expansion over two-column shapes (1^k 2^c), one alphabet letter
/// at a time.
Series qprime_2m(long long m, const AlphabetSpec& alphabet, const Rational& order);

/// Independent test oracle: sum_lambda K_{lambda,(2^m)}(q) * s_lambda(1^n)
/// with the Kostka-Foulkes polynomials generated from the charge statistic
/// over semistandard tableaux and dimensions from the hook content formula.
/// Exhaustive enumeration only; refuses m > 4 or n > 4.
Series kostka_foulkes_oracle(long long m, long long n);

/// Charge of a word over {1..max} whose letter multiplicities form a
/// partition; exposed for oracle tests.
long long charge_of_word(const std::vector<int>& word);

} // namespace qrr
