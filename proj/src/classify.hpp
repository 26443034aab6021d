#pragma once

// Enumeration over the (s, t) grid, conductor-shape filtering, comparison
// against the expected discriminant lists and Szpiro checks.

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "localdata.hpp"
#include "model.hpp"

namespace ecq {

enum class ConductorMode { Squarefree, PrimePower };

const char* to_string(ConductorMode m) noexcept;
/// "squarefree" or "prime-power"; throws InvalidArgument otherwise.
ConductorMode parse_mode(const std::string& s);
/// Mode used by the classification for this torsion order.
ConductorMode default_mode(int order);

struct CurveRecord {
    TateParameter param;
    WeierstrassModel integral_model;
    WeierstrassModel minimal_model;
    Int scaling;
    Factorization disc_min;
    Factorization conductor;
    std::vector<LocalData> locals;
    double szpiro_ratio = 0;  // log|disc_min| / log N
    unsigned torsion_verified = 0;
};

/// Full record for one parameter (no conductor-shape filtering).
CurveRecord make_record(const TateParameter& param);

struct EnumerateOptions {
    long bound = 100;
    ConductorMode mode = ConductorMode::PrimePower;
    unsigned jobs = 1;
};

/// Records for coprime (s, t), |s| <= bound, 0 < t <= bound, whose conductor
/// has exactly two prime divisors (both simple in squarefree mode),
/// deduplicated by minimal model and sorted by it.
std::vector<CurveRecord> enumerate(int order, const EnumerateOptions& options);

/// Does this conductor satisfy the mode's shape?
bool conductor_matches(const Factorization& conductor, ConductorMode mode);

// ---------------------------------------------------------------------------

struct ExpectedDisc {
    Factorization disc;  // compared up to sign when the table is unsigned
    bool matched = false;
};

struct TheoremTable {
    int order = 0;
    ConductorMode mode = ConductorMode::PrimePower;
    bool signed_discs = true;
    std::vector<Factorization> discs;
    std::vector<std::string> families;  // human-readable shapes
    unsigned szpiro_exponent = 0;
};

/// Throws DomainError for unsupported orders.
const TheoremTable& theorem_table(int order);

/// Family shape matched by |disc|, if any. `open` is set for shapes whose
/// completeness is unresolved.
struct FamilyMatch {
    std::string family;
    bool open = false;
};
std::optional<FamilyMatch> match_family(int order, const Factorization& disc);

struct SzpiroReport {
    unsigned exponent = 0;
    bool passed = true;
    double max_ratio = 0;
    std::vector<std::size_t> failures;  // indices into the record list
};

/// |disc_min| < N^K for every record, decided exactly.
SzpiroReport szpiro_check(const std::vector<CurveRecord>& records, unsigned exponent);

struct Discrepancy {
    int order;
    TateParameter param;
    Factorization disc_min;
    std::string claimed_conductor;
    Factorization computed_conductor;
    bool support_matches;    // computed support equals the claimed one
    bool exponents_match;
};

/// Conductors recomputed for the two curves whose conductor exponents the
/// classification states explicitly.
std::vector<Discrepancy> conductor_discrepancies();

struct VerifyReport {
    int order = 0;
    ConductorMode mode = ConductorMode::PrimePower;
    long bound = 0;
    std::vector<CurveRecord> records;
    std::vector<ExpectedDisc> expected;
    std::vector<std::pair<std::size_t, FamilyMatch>> family_matches;  // record index
    std::vector<std::size_t> violations;                              // record index
    SzpiroReport szpiro;

    std::size_t matched_count() const;
    std::size_t unwitnessed_count() const;
    bool has_open_family_members() const;
    /// Zero violations and Szpiro bound holds.
    bool passed() const { return violations.empty() && szpiro.passed; }
};

VerifyReport verify_theorem(int order, const EnumerateOptions& options);

// ---------------------------------------------------------------------------

struct FamilyInfo {
    std::string id;
    std::string shape;
    std::string condition;
    bool needs_prime;  // the caller supplies p
    unsigned min_k;
};

/// The order-4 table columns, each split by the sign choice.
const std::vector<FamilyInfo>& order4_families();

/// Witness curve for an order-4 family at k (and p where the family needs
/// it). Empty when the arithmetic side condition fails. DomainError for an
/// unknown id, out-of-range k, or a missing / non-prime p.
std::optional<CurveRecord> family_witness(const std::string& family, unsigned k,
                                          const std::optional<Int>& p = std::nullopt);

}  // namespace ecq
