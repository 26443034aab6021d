#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"

namespace ecq {

/// Long Weierstrass coefficients y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <typename T>
struct BasicModel {
    T a1, a2, a3, a4, a6;

    std::array<T, 5> coefficients() const { return {a1, a2, a3, a4, a6}; }

    friend bool operator==(const BasicModel& a, const BasicModel& b) {
        return a.coefficients() == b.coefficients();
    }
};

using WeierstrassModel = BasicModel<Int>;
using RationalModel = BasicModel<Rational>;

/// Strict lexicographic order on (a1, ..., a6); used to sort and deduplicate.
bool model_less(const WeierstrassModel& a, const WeierstrassModel& b);
std::string to_string(const WeierstrassModel& m);

template <typename T>
struct BasicInvariants {
    T b2, b4, b6, b8, c4, c6, disc;
};

struct Invariants : BasicInvariants<Int> {
    /// c4^3 / disc; empty when disc = 0.
    std::optional<Rational> j;
};

struct RationalInvariants : BasicInvariants<Rational> {
    std::optional<Rational> j;
};

Invariants invariants(const WeierstrassModel& model);
RationalInvariants invariants(const RationalModel& model);

/// Torsion orders with a Tate normal form parametrization.
bool is_supported_order(int n);
inline constexpr std::array<int, 8> kSupportedOrders = {4, 5, 6, 7, 8, 9, 10, 12};

/// A coprime pair (s, t) parametrizing lambda = s/t for torsion order N.
/// Construction rejects gcd(s,t) != 1, t = 0, vanishing transformation
/// denominators and singular models.
class TateParameter {
public:
    static TateParameter make(int order, Int s, Int t);

    int order() const noexcept { return order_; }
    const Int& s() const noexcept { return s_; }
    const Int& t() const noexcept { return t_; }

    /// (s, t) with t > 0; both signs describe the same lambda.
    TateParameter canonical() const;

    friend bool operator==(const TateParameter& a, const TateParameter& b) {
        return a.order_ == b.order_ && a.s_ == b.s_ && a.t_ == b.t_;
    }

private:
    TateParameter(int order, Int s, Int t) : order_(order), s_(std::move(s)), t_(std::move(t)) {}

    int order_;
    Int s_, t_;
};

/// Curve y^2 + (1-c)xy - by = x^3 - bx^2 and its rational invariants.
struct UniversalCurve {
    RationalModel model;
    RationalInvariants invariants;
};

/// b^3 (16b^2 - b(8c^2 + 20c - 1) - c(1-c)^3).
Rational universal_discriminant(const Rational& b, const Rational& c);
/// 16b^2 + 8b(1-c)(c+2) + (1-c)^4.
Rational universal_c4(const Rational& b, const Rational& c);
/// Throws SingularCurve when the discriminant vanishes.
UniversalCurve universal_model(const Rational& b, const Rational& c);

/// Integral model for (N, s, t) with no validation of the parameter.
WeierstrassModel integral_coefficients(int order, const Int& s, const Int& t);
WeierstrassModel integral_model(const TateParameter& param);

/// One polynomial factor of the closed-form discriminant, e.g. ("16s+t", v, 1).
struct DiscFactor {
    std::string label;
    Int value;
    unsigned exponent;
};

/// Closed-form discriminant as its factor list; the product is the
/// discriminant of integral_coefficients(order, s, t).
std::vector<DiscFactor> closed_form_factors(int order, const Int& s, const Int& t);
Int closed_form_disc(int order, const Int& s, const Int& t);
Int closed_form_disc(const TateParameter& param);

/// Exact rational point or the point at infinity.
struct Point {
    bool infinity = true;
    Rational x, y;

    static Point at_infinity() { return {}; }
    static Point affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

std::string to_string(const Point& p);

bool on_curve(const RationalModel& model, const Point& p);
bool on_curve(const WeierstrassModel& model, const Point& p);

RationalModel to_rational(const WeierstrassModel& model);

Point negate(const RationalModel& model, const Point& p);
Point add_points(const RationalModel& model, const Point& p, const Point& q);
Point add_points(const WeierstrassModel& model, const Point& p, const Point& q);
Point multiply(const RationalModel& model, const Point& p, unsigned long k);

/// Exact order of p when it does not exceed cap.
std::optional<unsigned> order_of_point(const RationalModel& model, const Point& p, unsigned cap);
std::optional<unsigned> order_of_point(const WeierstrassModel& model, const Point& p, unsigned cap);

}  // namespace ecq
