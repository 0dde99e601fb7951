#include "qrr/partition.hpp"

#include <sstream>
#include <stdexcept>

#include "qrr/errors.hpp"
#include "qrr/qfunctions.hpp"

namespace qrr {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long long Partition::weight() const {
    long long w = 0;
    for (long long p : parts_) w += p;
    return w;
}

long long Partition::part(long long i) const {
    if (i < 1 || i > (long long)parts_.size()) return 0;
    return parts_[i - 1];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<long long> c(parts_[0]);
    for (long long j = 1; j <= parts_[0]; ++j)
        for (long long p : parts_) c[j - 1] += (p >= j) ? 1 : 0;
    return Partition(std::move(c));
}

long long Partition::col(long long i) const {
    if (i < 1) return 0;
    long long h = 0;
    for (long long p : parts_)
        if (p >= i) ++h;
    return h;
}

bool Partition::contains(const Partition& mu) const {
    for (long long i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

long long n_of(const Partition& lambda) {
    long long a = 0;
    for (long long i = 1; i <= lambda.length(); ++i) a += (i - 1) * lambda.part(i);
    long long b = 0;
    Partition c = lambda.conjugate();
    for (long long i = 1; i <= c.length(); ++i) {
        long long h = c.part(i);
        b += h * (h - 1) / 2;
    }
    if (a != b)
        throw consistency_error("n_of: the two defining formulas disagree for " + lambda.str());
    return a;
}

Series b_of(const Partition& lambda) {
    Partition c = lambda.conjugate();
    Series acc = Series::one();
    for (long long i = 1; i <= c.length(); ++i) {
        long long d = c.part(i) - c.part(i + 1);
        if (d > 0) acc = acc * poch(1, 1, d, Rational(d * (d + 1) / 2));
    }
    return acc;
}

long long bracket(const Partition& lambda, const Partition& mu) {
    long long s = 0;
    long long top = std::max(lambda.part(1), mu.part(1));
    Partition lc = lambda.conjugate(), mc = mu.conjugate();
    for (long long i = 1; i <= top; ++i) s += lc.part(i) * mc.part(i);
    return s;
}

long long n_skew(const Partition& lambda, const Partition& mu) {
    Partition lc = lambda.conjugate(), mc = mu.conjugate();
    long long s = 0;
    for (long long i = 1; i <= lc.length(); ++i) {
        long long d = lc.part(i) - mc.part(i);
        s += d * (d - 1) / 2;
    }
    return s;
}

namespace {
void box_rec(long long max_part, long long rows_left, std::vector<long long>& cur,
             std::vector<Partition>& out) {
    out.emplace_back(Partition(cur));
    if (rows_left == 0) return;
    long long cap = cur.empty() ? max_part : cur.back();
    for (long long p = cap; p >= 1; --p) {
        cur.push_back(p);
        box_rec(max_part, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

void of_rec(long long remaining, long long cap, std::vector<long long>& cur,
            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(Partition(cur));
        return;
    }
    for (long long p = std::min(cap, remaining); p >= 1; --p) {
        cur.push_back(p);
        of_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_in_box(long long max_part, long long max_len) {
    std::vector<Partition> out;
    std::vector<long long> cur;
    box_rec(max_part, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_of(long long w) {
    if (w == 0) return {Partition()};
    std::vector<Partition> out;
    std::vector<long long> cur;
    of_rec(w, w, cur, out);
    return out;
}

} // namespace qrr
