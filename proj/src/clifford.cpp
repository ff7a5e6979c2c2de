#include "r11/clifford.hpp"

#include <ostream>

#include "r11/errors.hpp"

namespace r11 {

double Cliff11::max_abs() const {
    return std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c12)});
}

EvenNumber Cliff11::even_part() const { return EvenNumber::from_scalar_bivector(c0, c12); }

Vector11 Cliff11::vector_part() const { return {c1, c2}; }

Cliff11 inverse(const Cliff11& x) {
    const double n = x.norm_scalar();
    if (n == 0.0 || !std::isfinite(n)) {
        throw NonInvertible("element has vanishing x*conj(x)");
    }
    return conjugation(x) * (1.0 / n);
}

std::ostream& operator<<(std::ostream& os, const Cliff11& x) {
    return os << "(" << x.c0 << " + " << x.c1 << " e1 + " << x.c2 << " e2 + " << x.c12 << " e12)";
}

bool on_light_cone(const Vector11& x) {
    const double a = x.u1 * x.u1;
    const double b = x.u2 * x.u2;
    return std::abs(a - b) <= 1e-12 * (a + b);
}

Vector11 kelvin_inverse(const Vector11& x) {
    if (on_light_cone(x)) {
        throw LightConeError("vector lies on the light cone");
    }
    // x̄ = -x and x x̄ = -x^2, hence x^{-1} = x / x^2.
    const double sq = x.square();
    return {x.u1 / sq, x.u2 / sq};
}

EvenNumber inverse(const EvenNumber& a) {
    if (a.a1 == 0.0 || a.a2 == 0.0) {
        throw NonInvertible("even number has a zero idempotent component");
    }
    return {1.0 / a.a1, 1.0 / a.a2};
}

std::ostream& operator<<(std::ostream& os, const EvenNumber& a) {
    return os << "(" << a.a1 << " p1 + " << a.a2 << " p2)";
}

EvenNumber even_calculus(const std::function<double(double)>& f, const EvenNumber& a) {
    const double r1 = f(a.a1);
    const double r2 = f(a.a2);
    if (!std::isfinite(r1) || !std::isfinite(r2)) {
        throw DomainError("function undefined at an idempotent component");
    }
    return {r1, r2};
}

EvenNumber pow(const EvenNumber& a, double s) {
    const bool integral = std::nearbyint(s) == s;
    if (!integral && (a.a1 <= 0.0 || a.a2 <= 0.0)) {
        throw DomainError("non-integer power needs positive idempotent components");
    }
    if (s < 0.0 && (a.a1 == 0.0 || a.a2 == 0.0)) {
        throw DomainError("negative power of a zero component");
    }
    return even_calculus([s](double x) { return std::pow(x, s); }, a);
}

EvenNumber exp_bivector(double tau) { return {std::exp(tau), std::exp(-tau)}; }

Vector11 operator*(const EvenNumber& a, const Vector11& v) { return mul(a.cliff(), v.cliff()).vector_part(); }

Vector11 operator*(const Vector11& v, const EvenNumber& a) { return mul(v.cliff(), a.cliff()).vector_part(); }

EvenNumber operator*(const Vector11& u, const Vector11& v) { return mul(u.cliff(), v.cliff()).even_part(); }

}  // namespace r11
