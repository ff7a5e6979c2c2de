#include "r11/moebius.hpp"

#include <cmath>

#include "r11/errors.hpp"

namespace r11 {

namespace {

constexpr double kUnimodularTol = 1e-12;

void require_unimodular(const SL2R& g) {
    if (std::abs(g.det() - 1.0) > kUnimodularTol) {
        throw NotUnimodular("det = " + std::to_string(g.det()));
    }
}

}  // namespace

SL2R operator*(const SL2R& g, const SL2R& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

SU11 operator*(const SU11& g, const SU11& h) {
    return {g.alpha * h.alpha + g.beta * std::conj(h.beta), g.alpha * h.beta + g.beta * std::conj(h.alpha)};
}

double Cl11Matrix::pseudodet() const { return a.norm_scalar() - (b * Vector11{-b.u1, -b.u2}).scalar(); }

Cl11Matrix Cl11Matrix::inverse() const {
    const double delta = pseudodet();
    if (delta == 0.0) {
        throw DegenerateElement("zero pseudodeterminant");
    }
    const double s = 1.0 / delta;
    const EvenNumber abar = a.conj();
    return {EvenNumber{abar.a1 * s, abar.a2 * s}, Vector11{-b.u1 * s, -b.u2 * s}, sign};
}

Cl11Matrix operator*(const Cl11Matrix& g, const Cl11Matrix& h) {
    // [[a, b], [-b, a]] [[a', b'], [-b', a']] = [[aa' - bb', ab' + ba'], ...]
    return {g.a * h.a - g.b * h.b, g.a * h.b + g.b * h.a, g.sign * h.sign};
}

Realization realization(const GroupElement& g) {
    if (std::holds_alternative<SL2R>(g)) return Realization::Real;
    if (std::holds_alternative<SU11>(g)) return Realization::SU11;
    return Realization::Cl11;
}

CliffordMatrix operator*(const CliffordMatrix& g, const CliffordMatrix& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

CliffordMatrix operator*(double s, const CliffordMatrix& g) { return {s * g.a, s * g.b, s * g.c, s * g.d}; }

Cliff11 mobius(const CliffordMatrix& m, const Cliff11& x) {
    return mul(mul(m.a, x) + m.b, inverse(mul(m.c, x) + m.d));
}

SU11 to_su11(const SL2R& g) {
    require_unimodular(g);
    // The identities applied to g itself reverse products; applying them to
    // the transpose gives a homomorphism and agrees on symmetric matrices.
    const Complex i{0.0, 1.0};
    return {0.5 * (g.a + g.d - i * g.b + i * g.c), 0.5 * (g.b + g.c - i * g.a + i * g.d)};
}

Cl11Matrix cayley(const SL2R& g) {
    require_unimodular(g);
    // (1 - e12)/2 = p2 and (1 + e12)/2 = p1.
    const EvenNumber a{g.d, g.a};
    const Vector11 b{0.5 * (g.b + g.c), 0.5 * (g.c - g.b)};
    return {a, b, 1};
}

CliffordMatrix cayley_by_conjugation(const SL2R& g) {
    const Cliff11 e1 = Cliff11::e1();
    const Cliff11 e2 = Cliff11::e2();
    const Cliff11 e12 = Cliff11::e12();
    const Cliff11 e21 = mul(e2, e1);
    const CliffordMatrix left{1.0 - e12, e2 + e1, e2 - e1, -1.0 - e12};
    const CliffordMatrix middle{g.a, g.b * e2, g.c * e2, g.d};
    const CliffordMatrix right{1.0 + e21, e1 + e2, e2 - e1, e21 - 1.0};
    return 0.25 * (left * middle * right);
}

CliffordMatrix to_clifford(const Cl11Matrix& g) {
    return {g.a.cliff(), g.b.cliff(), -g.b.cliff(), g.a.cliff()};
}

int branch_index(Sheet sheet, int sign) { return 2 * (sheet == Sheet::minus ? 1 : 0) + (sign < 0 ? 1 : 0); }

Sheet branch_sheet(int branch) { return (branch & 2) != 0 ? Sheet::minus : Sheet::plus; }

int branch_sign(int branch) { return (branch & 1) != 0 ? -1 : 1; }

TildePoint circle_point(double lambda, const BranchCoord& coord) {
    if (!(lambda >= -1.0 && lambda < 0.0)) {
        throw BadRadius("lambda must lie in [-1, 0)");
    }
    if (coord.branch < 0 || coord.branch > 3) {
        throw OutOfDomain("branch index must be 0..3");
    }
    const Sheet sheet = branch_sheet(coord.branch);
    const double radius = sheet == Sheet::plus ? -lambda : -1.0 / lambda;
    const double s = branch_sign(coord.branch) * radius;
    return {sheet, Vector11{s * std::cosh(coord.t), -s * std::sinh(coord.t)}};
}

TildePoint boundary_point(const BranchCoord& coord) { return circle_point(-1.0, coord); }

BranchCoord branch_coord_of(const TildePoint& p) {
    const int sign = p.u.u1 < 0.0 ? -1 : 1;
    return {branch_index(p.sheet, sign), std::atanh(-p.u.u2 / p.u.u1)};
}

bool in_disk(const TildePoint& p) {
    const double sq = p.u.square();
    return p.sheet == Sheet::plus ? sq < -1.0 : sq > -1.0;
}

std::vector<SingularPoint> singular_points(const TildePoint& p) {
    std::vector<SingularPoint> out;
    const double diff = p.u.u1 - p.u.u2;
    const double sum = p.u.u1 + p.u.u2;
    for (int branch = 0; branch < 4; ++branch) {
        const int s = branch_sign(branch);
        if (-s * diff > 0.0) {
            out.push_back({{branch, std::log(-s * diff)}, 1});
        }
        if (-s * sum > 0.0) {
            out.push_back({{branch, -std::log(-s * sum)}, 2});
        }
    }
    return out;
}

SU11 section_disk(Complex a) {
    const double r2 = std::norm(a);
    if (!(r2 < 1.0)) {
        throw OutOfDomain("|a| must be < 1");
    }
    const double c = 1.0 / std::sqrt(1.0 - r2);
    return {Complex{c, 0.0}, c * a};
}

Cl11Matrix section_tilde(const Vector11& u) {
    const double q = 1.0 + u.square();
    if (q == 0.0) {
        throw OutOfDomain("1 + u^2 = 0");
    }
    const double k = 1.0 / std::sqrt(std::abs(q));
    return {EvenNumber{k}, k * u, q > 0.0 ? 1 : -1};
}

Complex section_inverse(const SU11& g) {
    if (g.alpha == Complex{}) {
        throw DegenerateElement("alpha = 0");
    }
    return g.beta / std::conj(g.alpha);
}

Vector11 section_inverse(const Cl11Matrix& g) {
    if (g.a.norm_scalar() == 0.0) {
        throw DegenerateElement("even entry is not invertible");
    }
    return g.b * inverse(g.a);
}

SU11 project(const SU11& g) {
    const double m = std::abs(g.alpha);
    if (m == 0.0) {
        throw DegenerateElement("alpha = 0");
    }
    return {g.alpha / m, Complex{}};
}

Cl11Matrix project(const Cl11Matrix& g) {
    const double n = g.a.norm_scalar();
    if (n == 0.0) {
        throw DegenerateElement("even entry is not invertible");
    }
    const double m = std::sqrt(std::abs(n));
    return {EvenNumber{g.a.a1 / m, g.a.a2 / m}, Vector11{}, n > 0.0 ? 1 : -1};
}

Complex act_by_inverse(const SU11& ginv, Complex z) {
    const Complex den = std::conj(ginv.beta) * z + std::conj(ginv.alpha);
    if (den == Complex{}) {
        throw SingularDenominator("disk action denominator vanishes");
    }
    return (ginv.alpha * z + ginv.beta) / den;
}

Complex act_by(const SU11& g, Complex z) { return act_by_inverse(g.inverse(), z); }

TildePoint act_by_inverse(const Cl11Matrix& ginv, const TildePoint& p) {
    const EvenNumber den = ginv.a - ginv.b * p.u;
    const double dd = den.norm_scalar();
    if (std::abs(dd) <= 1e-300 || dd == 0.0) {
        throw SingularDenominator("image lies on the light cone at infinity");
    }
    const Vector11 num = ginv.a * p.u + ginv.b;
    const Vector11 image = num * inverse(den);
    Sheet sheet = p.sheet;
    if (ginv.sign * dd < 0.0) {
        sheet = sheet == Sheet::plus ? Sheet::minus : Sheet::plus;
    }
    return {sheet, image};
}

TildePoint act_by(const Cl11Matrix& g, const TildePoint& p) { return act_by_inverse(g.inverse(), p); }

Complex act_by_inverse(const SL2R& ginv, Complex z) {
    const Complex den = ginv.c * z + ginv.d;
    if (den == Complex{}) {
        throw SingularDenominator("half-plane action denominator vanishes");
    }
    return (ginv.a * z + ginv.b) / den;
}

Complex act_by(const SL2R& g, Complex z) { return act_by_inverse(g.inverse(), z); }

Vector11 act_tilde_halfplane_by_inverse(const SL2R& ginv, const Vector11& x) {
    const Cliff11 e2 = Cliff11::e2();
    const CliffordMatrix m{ginv.a, ginv.b * e2, ginv.c * e2, ginv.d};
    const Cliff11 den = mul(m.c, x.cliff()) + m.d;
    if (den.norm_scalar() == 0.0) {
        throw SingularDenominator("half-plane action denominator is not invertible");
    }
    return mobius(m, x.cliff()).vector_part();
}

Vector11 act_tilde_halfplane_by(const SL2R& g, const Vector11& x) {
    return act_tilde_halfplane_by_inverse(g.inverse(), x);
}

double invariant_density(Complex a) {
    const double q = 1.0 - std::norm(a);
    if (q == 0.0) {
        throw OutOfDomain("|a| = 1");
    }
    return 1.0 / (q * q);
}

double invariant_density(const Vector11& u) {
    const double q = 1.0 - u.u1 * u.u1 + u.u2 * u.u2;
    if (q == 0.0) {
        throw OutOfDomain("1 + u^2 = 0");
    }
    return 1.0 / (q * q);
}

}  // namespace r11
