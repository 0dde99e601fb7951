#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrr/rational.hpp"
#include "qrr/series.hpp"

namespace qrr {

enum class IdentityKind { theorem, conjecture, classical };

std::string kind_name(IdentityKind k);

/// Validated parameter assignment for a registry entry. Values are kept as
/// strings (the CLI surface) with typed accessors.
class Params {
public:
    void set(const std::string& key, std::string value) { kv_[key] = std::move(value); }
    bool has(const std::string& key) const { return kv_.count(key) > 0; }
    long long get_int(const std::string& key) const;
    std::vector<Rational> get_rationals(const std::string& key) const;
    const std::map<std::string, std::string>& raw() const { return kv_; }
    std::string str() const;

private:
    std::map<std::string, std::string> kv_;
};

Rational parse_rational(const std::string& s);

struct ParamDecl {
    std::string name;
    // literal default; "@same:<param>" copies another resolved value and
    // "@zeros:<param>" expands to (value-1) comma-separated zeros
    std::string default_value;
    std::string doc;
};

struct VerificationReport {
    std::string id;
    IdentityKind kind = IdentityKind::theorem;
    std::map<std::string, std::string> params;
    long long requested_order = 0;
    Rational effective_order{0};
    std::string status;  // "pass" | "fail" | "error"
    std::optional<Series::Mismatch> first_mismatch;
    double wall_time_ms = 0;
    std::vector<std::string> convention_notes;
};

/// One identity or conjecture: builders for both sides plus the shared
/// Puiseux prefactor exponent, parameter schema and secondary checks.
struct IdentityEntry {
    std::string id;
    IdentityKind kind = IdentityKind::theorem;
    std::string description;
    std::vector<ParamDecl> params;
    long long default_order = 30;
    std::function<void(const Params&)> validate;                       // optional
    std::function<Rational(const Params&)> offset;                     // optional (0)
    std::function<Series(const Params&, const Rational& bound)> lhs;
    std::function<Series(const Params&, const Rational& bound)> rhs;
    // secondary checks appended to the report (alternative sign conventions,
    // product-vs-lattice right-hand sides); may downgrade status to "fail"
    std::function<void(const Params&, const Rational& bound, VerificationReport&)> extra;
};

/// The full catalog, built once; entries are immutable after construction.
const std::vector<IdentityEntry>& registry();
const IdentityEntry* find_identity(const std::string& id);

/// Resolve defaults and validate overrides against the entry's schema.
/// Throws std::invalid_argument on unknown keys or bad values.
Params make_params(const IdentityEntry& entry,
                   const std::map<std::string, std::string>& overrides);

struct SidePair {
    Series lhs, rhs;
    Rational bound{0};
};
/// Build both sides independently (nothing is shared between them).
SidePair build_sides(const IdentityEntry& entry, const Params& params, long long order);

/// Compare two prebuilt sides; the test hooks route perturbed series
/// through the same report path as verify().
VerificationReport compare_and_report(const IdentityEntry& entry, const Params& params,
                                      long long order, const Series& lhs, const Series& rhs,
                                      const Rational& bound);

VerificationReport verify(const IdentityEntry& entry, const Params& params, long long order);

/// Report as a single JSON object per the stable schema:
/// {id, params, order, status, first_mismatch, wall_time_ms, convention_notes}
/// with coefficients serialized as decimal strings.
std::string report_to_json(const VerificationReport& report);

} // namespace qrr
