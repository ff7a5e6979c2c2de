#pragma once

// Arithmetic in the real Clifford algebra Cl(1,1) generated by e1, e2 with
// e1^2 = -1, e2^2 = +1, e1 e2 = -e2 e1.  The bivector e12 = e1 e2 squares
// to +1, so the even subalgebra is the ring of split-complex numbers.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iosfwd>

namespace r11 {

class EvenNumber;
class Vector11;

/// General element c0 + c1 e1 + c2 e2 + c12 e1e2.
class Cliff11 {
public:
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c12 = 0.0;

    constexpr Cliff11() = default;
    constexpr Cliff11(double s) : c0(s) {}  // NOLINT(google-explicit-constructor)
    constexpr Cliff11(double s, double x1, double x2, double b) : c0(s), c1(x1), c2(x2), c12(b) {}

    static constexpr Cliff11 e1() { return {0, 1, 0, 0}; }
    static constexpr Cliff11 e2() { return {0, 0, 1, 0}; }
    static constexpr Cliff11 e12() { return {0, 0, 0, 1}; }

    constexpr Cliff11& operator+=(const Cliff11& o) {
        c0 += o.c0; c1 += o.c1; c2 += o.c2; c12 += o.c12;
        return *this;
    }
    constexpr Cliff11& operator-=(const Cliff11& o) {
        c0 -= o.c0; c1 -= o.c1; c2 -= o.c2; c12 -= o.c12;
        return *this;
    }
    constexpr Cliff11& operator*=(double s) {
        c0 *= s; c1 *= s; c2 *= s; c12 *= s;
        return *this;
    }

    [[nodiscard]] constexpr bool is_even(double tol = 0.0) const {
        return std::abs(c1) <= tol && std::abs(c2) <= tol;
    }
    [[nodiscard]] constexpr bool is_vector(double tol = 0.0) const {
        return std::abs(c0) <= tol && std::abs(c12) <= tol;
    }
    /// x * conjugation(x); always a scalar in Cl(1,1).
    [[nodiscard]] double norm_scalar() const { return c0 * c0 + c1 * c1 - c2 * c2 - c12 * c12; }
    [[nodiscard]] double max_abs() const;

    [[nodiscard]] EvenNumber even_part() const;
    [[nodiscard]] Vector11 vector_part() const;

    friend constexpr bool operator==(const Cliff11&, const Cliff11&) = default;
};

constexpr Cliff11 operator+(Cliff11 a, const Cliff11& b) { return a += b; }
constexpr Cliff11 operator-(Cliff11 a, const Cliff11& b) { return a -= b; }
constexpr Cliff11 operator-(const Cliff11& a) { return {-a.c0, -a.c1, -a.c2, -a.c12}; }
constexpr Cliff11 operator*(Cliff11 a, double s) { return a *= s; }
constexpr Cliff11 operator*(double s, Cliff11 a) { return a *= s; }

/// Geometric product.
constexpr Cliff11 mul(const Cliff11& x, const Cliff11& y) {
    return {
        x.c0 * y.c0 - x.c1 * y.c1 + x.c2 * y.c2 + x.c12 * y.c12,
        x.c0 * y.c1 + x.c1 * y.c0 - x.c2 * y.c12 + x.c12 * y.c2,
        x.c0 * y.c2 + x.c2 * y.c0 - x.c1 * y.c12 + x.c12 * y.c1,
        x.c0 * y.c12 + x.c12 * y.c0 + x.c1 * y.c2 - x.c2 * y.c1,
    };
}
constexpr Cliff11 operator*(const Cliff11& x, const Cliff11& y) { return mul(x, y); }

enum class Involution { reversion, conjugation, grade };

/// Sign pattern per grade r: reversion (-1)^{r(r-1)/2}, conjugation
/// (-1)^{r(r+1)/2}, grade automorphism (-1)^r.
constexpr Cliff11 involution(Involution kind, const Cliff11& x) {
    switch (kind) {
        case Involution::reversion: return {x.c0, x.c1, x.c2, -x.c12};
        case Involution::conjugation: return {x.c0, -x.c1, -x.c2, -x.c12};
        case Involution::grade: return {x.c0, -x.c1, -x.c2, x.c12};
    }
    return x;
}
constexpr Cliff11 reversion(const Cliff11& x) { return involution(Involution::reversion, x); }
constexpr Cliff11 conjugation(const Cliff11& x) { return involution(Involution::conjugation, x); }
constexpr Cliff11 grade_involution(const Cliff11& x) { return involution(Involution::grade, x); }

/// Inverse of a general element; throws NonInvertible when x x̄ = 0.
Cliff11 inverse(const Cliff11& x);

std::ostream& operator<<(std::ostream& os, const Cliff11& x);

/// Vector u1 e1 + u2 e2 of R^{1,1}.
class Vector11 {
public:
    double u1 = 0.0;
    double u2 = 0.0;

    constexpr Vector11() = default;
    constexpr Vector11(double a, double b) : u1(a), u2(b) {}

    /// u^2 = -u1^2 + u2^2.
    [[nodiscard]] constexpr double square() const { return -u1 * u1 + u2 * u2; }
    [[nodiscard]] constexpr Cliff11 cliff() const { return {0, u1, u2, 0}; }

    friend constexpr bool operator==(const Vector11&, const Vector11&) = default;
};

constexpr Vector11 operator+(Vector11 a, Vector11 b) { return {a.u1 + b.u1, a.u2 + b.u2}; }
constexpr Vector11 operator-(Vector11 a, Vector11 b) { return {a.u1 - b.u1, a.u2 - b.u2}; }
constexpr Vector11 operator*(double s, Vector11 a) { return {s * a.u1, s * a.u2}; }

/// True when |u1^2 - u2^2| <= 1e-12 (u1^2 + u2^2).
bool on_light_cone(const Vector11& x);

/// x^{-1} = x̄ / (x x̄) with x x̄ = -x^2.  Throws LightConeError on the cone.
Vector11 kelvin_inverse(const Vector11& x);

/// Even number a1 p1 + a2 p2 in the idempotent basis p1 = (1+e12)/2,
/// p2 = (1-e12)/2.  Products, inverses and functions act componentwise.
class EvenNumber {
public:
    double a1 = 0.0;
    double a2 = 0.0;

    constexpr EvenNumber() = default;
    constexpr EvenNumber(double s) : a1(s), a2(s) {}  // NOLINT(google-explicit-constructor)
    constexpr EvenNumber(double first, double second) : a1(first), a2(second) {}

    static constexpr EvenNumber p1() { return {1.0, 0.0}; }
    static constexpr EvenNumber p2() { return {0.0, 1.0}; }
    static constexpr EvenNumber e12() { return {1.0, -1.0}; }
    static constexpr EvenNumber from_scalar_bivector(double c0, double c12) { return {c0 + c12, c0 - c12}; }

    [[nodiscard]] constexpr double scalar() const { return 0.5 * (a1 + a2); }
    [[nodiscard]] constexpr double bivector() const { return 0.5 * (a1 - a2); }
    [[nodiscard]] constexpr Cliff11 cliff() const { return {scalar(), 0, 0, bivector()}; }
    /// Conjugation (and reversion) swap the idempotents.
    [[nodiscard]] constexpr EvenNumber conj() const { return {a2, a1}; }
    /// a ā = a1 a2.
    [[nodiscard]] constexpr double norm_scalar() const { return a1 * a2; }
    [[nodiscard]] double max_abs() const { return std::max(std::abs(a1), std::abs(a2)); }

    constexpr EvenNumber& operator+=(const EvenNumber& o) { a1 += o.a1; a2 += o.a2; return *this; }
    constexpr EvenNumber& operator-=(const EvenNumber& o) { a1 -= o.a1; a2 -= o.a2; return *this; }
    constexpr EvenNumber& operator*=(const EvenNumber& o) { a1 *= o.a1; a2 *= o.a2; return *this; }

    friend constexpr bool operator==(const EvenNumber&, const EvenNumber&) = default;
};

constexpr EvenNumber operator+(EvenNumber a, const EvenNumber& b) { return a += b; }
constexpr EvenNumber operator-(EvenNumber a, const EvenNumber& b) { return a -= b; }
constexpr EvenNumber operator-(const EvenNumber& a) { return {-a.a1, -a.a2}; }
constexpr EvenNumber operator*(EvenNumber a, const EvenNumber& b) { return a *= b; }

/// Componentwise inverse; throws NonInvertible if a component vanishes.
EvenNumber inverse(const EvenNumber& a);

std::ostream& operator<<(std::ostream& os, const EvenNumber& a);

/// f(a1) p1 + f(a2) p2.  Throws DomainError when f returns a non-finite
/// value at a finite component.
EvenNumber even_calculus(const std::function<double(double)>& f, const EvenNumber& a);

/// a^s.  Integer s works for any invertible a (or any a when s >= 0); a
/// non-integer s requires both components positive.
EvenNumber pow(const EvenNumber& a, double s);

/// cosh(tau) + e12 sinh(tau) = e^tau p1 + e^-tau p2.
EvenNumber exp_bivector(double tau);

// Mixed products needed by the Möbius machinery: an even number times a
// vector is a vector, a vector times a vector is an even number.
Vector11 operator*(const EvenNumber& a, const Vector11& v);
Vector11 operator*(const Vector11& v, const EvenNumber& a);
EvenNumber operator*(const Vector11& u, const Vector11& v);

}  // namespace r11
