#pragma once

#include <string>
#include <vector>

#include "qrr/series.hpp"

namespace qrr {

/// Integer partition: a weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    long long length() const { return (long long)parts_.size(); }
    long long weight() const;
    /// i-th part, 1-based, zero past the end.
    long long part(long long i) const;

    Partition conjugate() const;
    /// i-th column height, 1-based (conjugate part), zero past the end.
    long long col(long long i) const;

    bool contains(const Partition& mu) const;  // mu_i <= lambda_i for all i
    bool operator==(const Partition&) const = default;

    std::string str() const;

private:
    std::vector<long long> parts_;
};

/// n(lambda) = sum (i-1) lambda_i; evaluated through both defining formulas
/// (the conjugate binomial sum as well) and checked for agreement.
long long n_of(const Partition& lambda);

/// b_lambda(q) = prod_i (q;q)_{lambda'_i - lambda'_{i+1}}, an exact polynomial
/// with constant term 1.
Series b_of(const Partition& lambda);

/// (lambda|mu) = sum_i lambda'_i mu'_i.
long long bracket(const Partition& lambda, const Partition& mu);

/// n(lambda/mu) = sum_i C(lambda'_i - mu'_i, 2) for mu inside lambda.
long long n_skew(const Partition& lambda, const Partition& mu);

/// All partitions fitting in a max_part x max_len box, the empty one included.
std::vector<Partition> partitions_in_box(long long max_part, long long max_len);

/// All partitions of weight w.
std::vector<Partition> partitions_of(long long w);

} // namespace qrr
