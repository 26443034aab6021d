#include "model.hpp"

#include <algorithm>

namespace ecq {

namespace {

template <typename T, typename Out>
void fill_invariants(const BasicModel<T>& m, Out& out) {
    const T& a1 = m.a1;
    const T& a2 = m.a2;
    const T& a3 = m.a3;
    const T& a4 = m.a4;
    const T& a6 = m.a6;
    out.b2 = a1 * a1 + 4 * a2;
    out.b4 = 2 * a4 + a1 * a3;
    out.b6 = a3 * a3 + 4 * a6;
    out.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    out.c4 = out.b2 * out.b2 - 24 * out.b4;
    out.c6 = -out.b2 * out.b2 * out.b2 + 36 * out.b2 * out.b4 - 216 * out.b6;
    out.disc = -out.b2 * out.b2 * out.b8 - 8 * out.b4 * out.b4 * out.b4 - 27 * out.b6 * out.b6 +
               9 * out.b2 * out.b4 * out.b6;
    if (out.disc != 0) {
        out.j = Rational(out.c4 * out.c4 * out.c4) / Rational(out.disc);
        out.j->canonicalize();
    }
}

std::string singular_reason(int order, const Int& s, const Int& t) {
    for (const auto& f : closed_form_factors(order, s, t))
        if (f.value == 0) return "singular: " + f.label + "=0";
    return "singular curve";
}

}  // namespace

bool model_less(const WeierstrassModel& a, const WeierstrassModel& b) {
    const auto ca = a.coefficients();
    const auto cb = b.coefficients();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::string to_string(const WeierstrassModel& m) {
    return "[" + m.a1.get_str() + "," + m.a2.get_str() + "," + m.a3.get_str() + "," + m.a4.get_str() + "," +
           m.a6.get_str() + "]";
}

Invariants invariants(const WeierstrassModel& model) {
    Invariants out;
    fill_invariants(model, out);
    return out;
}

RationalInvariants invariants(const RationalModel& model) {
    RationalInvariants out;
    fill_invariants(model, out);
    return out;
}

bool is_supported_order(int n) {
    return std::find(kSupportedOrders.begin(), kSupportedOrders.end(), n) != kSupportedOrders.end();
}

TateParameter TateParameter::make(int order, Int s, Int t) {
    if (!is_supported_order(order))
        throw Error(ErrorCode::DomainError,
                    "unsupported torsion order N=" + std::to_string(order) + " (expected one of 4..10, 12)");
    if (t == 0) throw Error(ErrorCode::DegenerateParameter, "degenerate: t=0");
    if (gcd(s, t) != 1)
        throw Error(ErrorCode::DomainError, "gcd(s,t) must be 1, got s=" + s.get_str() + " t=" + t.get_str());
    switch (order) {
        case 8:
            if (s == 0) throw Error(ErrorCode::DegenerateParameter, "degenerate: s=0 (transformation denominator)");
            break;
        case 10:
            if (s * s - 3 * s * t + t * t == 0)
                throw Error(ErrorCode::DegenerateParameter, "degenerate: s^2-3st+t^2=0 (transformation denominator)");
            break;
        case 12:
            if (s == t) throw Error(ErrorCode::DegenerateParameter, "degenerate: s-t=0 (transformation denominator)");
            break;
        default:
            break;
    }
    if (closed_form_disc(order, s, t) == 0) throw Error(ErrorCode::SingularCurve, singular_reason(order, s, t));
    return TateParameter(order, std::move(s), std::move(t));
}

TateParameter TateParameter::canonical() const {
    if (t_ > 0) return *this;
    return TateParameter(order_, -s_, -t_);
}

Rational universal_discriminant(const Rational& b, const Rational& c) {
    const Rational one_minus_c = 1 - c;
    Rational d = b * b * b * (16 * b * b - b * (8 * c * c + 20 * c - 1) - c * one_minus_c * one_minus_c * one_minus_c);
    d.canonicalize();
    return d;
}

Rational universal_c4(const Rational& b, const Rational& c) {
    const Rational one_minus_c = 1 - c;
    Rational v = 16 * b * b + 8 * b * one_minus_c * (c + 2) + one_minus_c * one_minus_c * one_minus_c * one_minus_c;
    v.canonicalize();
    return v;
}

UniversalCurve universal_model(const Rational& b, const Rational& c) {
    UniversalCurve out{RationalModel{1 - c, -b, -b, Rational(0), Rational(0)}, {}};
    for (Rational* a : {&out.model.a1, &out.model.a2, &out.model.a3}) a->canonicalize();
    out.invariants = invariants(out.model);
    if (out.invariants.disc == 0) throw Error(ErrorCode::SingularCurve, "singular: discriminant of E_{b,c} vanishes");
    return out;
}

WeierstrassModel integral_coefficients(int order, const Int& s, const Int& t) {
    const Int st = s * t;
    switch (order) {
        case 4:
            return {t, -st, -st * t, 0, 0};
        case 5:
            return {t - s, -st, -st * t, 0, 0};
        case 6:
            return {t - s, -(st + s * s), -(t * t * s + t * s * s), 0, 0};
        case 7:
            return {t * t - s * s + st, -(s * s * st - s * s * t * t), -s * s * (s * t * t * t - t * t * t * t), 0, 0};
        case 8: {
            const Int common = (s - t) * (2 * s - t);
            return {-(t * t - 4 * st + 2 * s * s), -s * s * common, -t * s * s * s * common, 0, 0};
        }
        case 9: {
            const Int common = s * s * (s - t) * (s * s - st + t * t);
            return {t * t * t - s * s * (s - t), -t * common, -t * t * t * t * common, 0, 0};
        }
        case 10: {
            const Int q = s * s - 3 * st + t * t;
            const Int common = s * s * s * (s - t) * (2 * s - t);
            return {t * q + s * (s - t) * (2 * s - t), -t * common, -t * t * common * q, 0, 0};
        }
        case 12: {
            const Int d = s - t;
            const Int r = 3 * s * s - 3 * st + t * t;
            const Int w = 2 * s * s - 2 * st + t * t;
            const Int common = s * (2 * s - t) * r * w;
            return {t * d * d * d + s * (2 * s - t) * r, -d * d * common, -t * d * d * d * d * d * common, 0, 0};
        }
        default:
            throw Error(ErrorCode::DomainError, "unsupported torsion order N=" + std::to_string(order));
    }
}

WeierstrassModel integral_model(const TateParameter& param) {
    return integral_coefficients(param.order(), param.s(), param.t());
}

std::vector<DiscFactor> closed_form_factors(int order, const Int& s, const Int& t) {
    const Int st = s * t;
    const Int ss = s * s;
    const Int tt = t * t;
    switch (order) {
        case 4:
            return {{"s", s, 4}, {"t", t, 7}, {"16s+t", 16 * s + t, 1}};
        case 5:
            return {{"s", s, 5}, {"t", t, 5}, {"s^2-11st-t^2", ss - 11 * st - tt, 1}};
        case 6:
            return {{"s", s, 6}, {"t", t, 2}, {"s+t", s + t, 3}, {"9s+t", 9 * s + t, 1}};
        case 7:
            return {{"s", s, 7},
                    {"t", t, 7},
                    {"s-t", s - t, 7},
                    {"s^3-8s^2t+5st^2+t^3", ss * s - 8 * ss * t + 5 * s * tt + tt * t, 1}};
        case 8:
            return {{"s", s, 8},
                    {"t", t, 2},
                    {"s-t", s - t, 8},
                    {"2s-t", 2 * s - t, 4},
                    {"8s^2-8st+t^2", 8 * ss - 8 * st + tt, 1}};
        case 9:
            return {{"s", s, 9},
                    {"t", t, 9},
                    {"s-t", s - t, 9},
                    {"s^2-st+t^2", ss - st + tt, 3},
                    {"s^3-6s^2t+3st^2+t^3", ss * s - 6 * ss * t + 3 * s * tt + tt * t, 1}};
        case 10:
            return {{"s", s, 10},
                    {"t", t, 5},
                    {"s-t", s - t, 10},
                    {"2s-t", 2 * s - t, 5},
                    {"4s^2-2st-t^2", 4 * ss - 2 * st - tt, 1},
                    {"s^2-3st+t^2", ss - 3 * st + tt, 2}};
        case 12:
            return {{"s", s, 12},
                    {"t", t, 2},
                    {"s-t", s - t, 12},
                    {"2s-t", 2 * s - t, 6},
                    {"3s^2-3st+t^2", 3 * ss - 3 * st + tt, 4},
                    {"2s^2-2st+t^2", 2 * ss - 2 * st + tt, 3},
                    {"6s^2-6st+t^2", 6 * ss - 6 * st + tt, 1}};
        default:
            throw Error(ErrorCode::DomainError, "unsupported torsion order N=" + std::to_string(order));
    }
}

Int closed_form_disc(int order, const Int& s, const Int& t) {
    Int d = 1;
    for (const auto& f : closed_form_factors(order, s, t)) d *= pow(f.value, f.exponent);
    return d;
}

Int closed_form_disc(const TateParameter& param) { return closed_form_disc(param.order(), param.s(), param.t()); }

std::string to_string(const Point& p) {
    if (p.infinity) return "O";
    return "(" + p.x.get_str() + "," + p.y.get_str() + ")";
}

RationalModel to_rational(const WeierstrassModel& m) {
    return {Rational(m.a1), Rational(m.a2), Rational(m.a3), Rational(m.a4), Rational(m.a6)};
}

bool on_curve(const RationalModel& m, const Point& p) {
    if (p.infinity) return true;
    const Rational& x = p.x;
    const Rational& y = p.y;
    return y * y + m.a1 * x * y + m.a3 * y == x * x * x + m.a2 * x * x + m.a4 * x + m.a6;
}

bool on_curve(const WeierstrassModel& m, const Point& p) { return on_curve(to_rational(m), p); }

Point negate(const RationalModel& m, const Point& p) {
    if (p.infinity) return p;
    Rational y = -p.y - m.a1 * p.x - m.a3;
    y.canonicalize();
    return Point::affine(p.x, y);
}

namespace {

Point add_unchecked(const RationalModel& m, const Point& p, const Point& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rational slope, intercept;
    if (p.x == q.x) {
        if (p.y + q.y + m.a1 * q.x + m.a3 == 0) return Point::at_infinity();
        const Rational denom = 2 * p.y + m.a1 * p.x + m.a3;
        slope = (3 * p.x * p.x + 2 * m.a2 * p.x + m.a4 - m.a1 * p.y) / denom;
        intercept = (-p.x * p.x * p.x + m.a4 * p.x + 2 * m.a6 - m.a3 * p.y) / denom;
    } else {
        const Rational dx = q.x - p.x;
        slope = (q.y - p.y) / dx;
        intercept = (p.y * q.x - q.y * p.x) / dx;
    }
    Rational x = slope * slope + m.a1 * slope - m.a2 - p.x - q.x;
    Rational y = -(slope + m.a1) * x - intercept - m.a3;
    x.canonicalize();
    y.canonicalize();
    return Point::affine(std::move(x), std::move(y));
}

void require_on_curve(const RationalModel& m, const Point& p) {
    if (!on_curve(m, p)) throw Error(ErrorCode::PointNotOnCurve, "point " + to_string(p) + " is not on the curve");
}

}  // namespace

Point add_points(const RationalModel& m, const Point& p, const Point& q) {
    require_on_curve(m, p);
    require_on_curve(m, q);
    return add_unchecked(m, p, q);
}

Point add_points(const WeierstrassModel& m, const Point& p, const Point& q) { return add_points(to_rational(m), p, q); }

Point multiply(const RationalModel& m, const Point& p, unsigned long k) {
    require_on_curve(m, p);
    Point result = Point::at_infinity();
    Point addend = p;
    while (k) {
        if (k & 1) result = add_unchecked(m, result, addend);
        k >>= 1;
        if (k) addend = add_unchecked(m, addend, addend);
    }
    return result;
}

std::optional<unsigned> order_of_point(const RationalModel& m, const Point& p, unsigned cap) {
    if (cap < 1) throw Error(ErrorCode::DomainError, "order cap must be >= 1");
    require_on_curve(m, p);
    Point q = p;
    for (unsigned k = 1; k <= cap; ++k) {
        if (q.infinity) return k;
        q = add_unchecked(m, q, p);
    }
    return std::nullopt;
}

std::optional<unsigned> order_of_point(const WeierstrassModel& m, const Point& p, unsigned cap) {
    return order_of_point(to_rational(m), p, cap);
}

}  // namespace ecq
