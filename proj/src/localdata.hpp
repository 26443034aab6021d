#pragma once

// Local reduction data (Tate's algorithm), global minimal models and the
// conductor N = prod p^f_p, with f_p = ord_p(disc_min) - m_p + 1.

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "model.hpp"

namespace ecq {

enum class ReductionType { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

const char* to_string(ReductionType r) noexcept;

struct KodairaSymbol {
    enum class Family { I, IStar, II, III, IV, IVStar, IIIStar, IIStar };

    Family family = Family::I;
    unsigned n = 0;  // index for I_n and I_n*

    /// "I0", "I7", "I2*", "II", "IV*", ...
    std::string to_string() const;
    /// Number of components of the special fiber.
    unsigned components() const;

    friend bool operator==(const KodairaSymbol& a, const KodairaSymbol& b) {
        return a.family == b.family && a.n == b.n;
    }
};

struct LocalData {
    Int p;
    unsigned ord_disc = 0;
    KodairaSymbol kodaira;
    unsigned conductor_exponent = 0;
    unsigned components = 1;
    ReductionType reduction = ReductionType::Good;
};

/// Output of Tate's algorithm at one prime. `model` is minimal at p and
/// integrally isomorphic to the input; `scaling_exponent` is k with
/// disc(input) = p^(12k) disc(model).
struct LocalReduction {
    LocalData data;
    WeierstrassModel model;
    unsigned scaling_exponent = 0;
};

/// General change of variables x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
/// Empty when the image is not integral.
std::optional<WeierstrassModel> try_transform(const WeierstrassModel& m, const Int& u, const Int& r, const Int& s,
                                              const Int& t);
/// As try_transform, but a non-integral image is an internal error.
WeierstrassModel transform(const WeierstrassModel& m, const Int& u, const Int& r, const Int& s, const Int& t);

LocalReduction tate_algorithm(const WeierstrassModel& model, const Int& p);
LocalData tate_local(const WeierstrassModel& model, const Int& p);

/// Representative with a1, a3 in {0,1} and a2 in {-1,0,1} (u = 1 changes only).
WeierstrassModel reduce_model(const WeierstrassModel& model);

struct MinimalModel {
    WeierstrassModel model;  // reduced global minimal model
    Int scaling;             // u > 0 with disc = u^12 disc_min
};

MinimalModel minimalize(const WeierstrassModel& model);
/// `primes` must contain every prime divisor of disc(model).
MinimalModel minimalize(const WeierstrassModel& model, const std::vector<Int>& primes);

struct GlobalData {
    WeierstrassModel minimal_model;
    Int scaling;
    Factorization disc_min;
    Factorization conductor;
    std::vector<LocalData> locals;  // one per bad prime, increasing p
};

GlobalData conductor(const WeierstrassModel& model);
GlobalData conductor(const WeierstrassModel& model, const std::vector<Int>& primes);

}  // namespace ecq
