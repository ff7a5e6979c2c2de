#pragma once

// Three realizations of SL(2,R) and the geometry they act on: the unit disk
// D (via SU(1,1)), the upper half plane H (real matrices) and the conformal
// unit disk of the two-fold cover of R^{1,1} (via the Cayley-conjugated
// Clifford realization).

#include <complex>
#include <variant>
#include <vector>

#include "r11/clifford.hpp"

namespace r11 {

using Complex = std::complex<double>;

/// Real unimodular matrix [[a, b], [c, d]].
struct SL2R {
    double a = 1, b = 0, c = 0, d = 1;

    [[nodiscard]] double det() const { return a * d - b * c; }
    [[nodiscard]] SL2R inverse() const { return {d, -b, -c, a}; }
    static SL2R identity() { return {}; }
};
SL2R operator*(const SL2R& g, const SL2R& h);

/// [[alpha, beta], [conj(beta), conj(alpha)]] with |alpha|^2 - |beta|^2 = 1.
struct SU11 {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    [[nodiscard]] double det() const { return std::norm(alpha) - std::norm(beta); }
    [[nodiscard]] SU11 inverse() const { return {std::conj(alpha), -beta}; }
    static SU11 identity() { return {}; }
};
SU11 operator*(const SU11& g, const SU11& h);

/// [[a, b], [-b, a]] with a even and b a vector.  The pseudodeterminant
/// a ā - b b̄ is +1 for images of SL(2,R); normalized sections of the
/// hyperbolic disk may carry -1, recorded in `sign`.
struct Cl11Matrix {
    EvenNumber a{1.0};
    Vector11 b{};
    int sign = 1;

    [[nodiscard]] double pseudodet() const;
    [[nodiscard]] Cl11Matrix inverse() const;
    static Cl11Matrix identity() { return {}; }
};
Cl11Matrix operator*(const Cl11Matrix& g, const Cl11Matrix& h);

/// Tagged group element.
using GroupElement = std::variant<SL2R, SU11, Cl11Matrix>;
enum class Realization { Real, SU11, Cl11 };
Realization realization(const GroupElement& g);

/// Generic 2x2 matrix over Cl(1,1), used for the conformal special matrices
/// and for the explicit Cayley conjugation product.
struct CliffordMatrix {
    Cliff11 a{1.0}, b{}, c{}, d{1.0};
};
CliffordMatrix operator*(const CliffordMatrix& g, const CliffordMatrix& h);
CliffordMatrix operator*(double s, const CliffordMatrix& g);
/// x |-> (a x + b)(c x + d)^{-1}.
Cliff11 mobius(const CliffordMatrix& m, const Cliff11& x);

// --- realizations --------------------------------------------------------

/// alpha = (a + d - ib + ic)/2, beta = (b + c - ia + id)/2.  Throws
/// NotUnimodular when |det - 1| > 1e-12.
SU11 to_su11(const SL2R& g);

/// a~ = ((1 - e12) a + (1 + e12) d)/2, b~ = (b (e1 - e2) + c (e1 + e2))/2.
Cl11Matrix cayley(const SL2R& g);

/// The same map written as the explicit product T^{-1} [[a, b e2], [c e2, d]] T / 4.
CliffordMatrix cayley_by_conjugation(const SL2R& g);
CliffordMatrix to_clifford(const Cl11Matrix& g);

// --- double cover --------------------------------------------------------

enum class Sheet { plus, minus };

/// Point of the two-fold cover of R^{1,1}.
struct TildePoint {
    Sheet sheet = Sheet::minus;
    Vector11 u{};
};

/// Branch coordinate on the circle: branch = 2*(sheet bit) + (sign bit of the
/// e1 factor), sheet bit 0 = plus sheet, sign bit 0 = +e1.  The point is
/// +-e1 e^{e12 t} = +-(cosh t e1 - sinh t e2).
struct BranchCoord {
    int branch = 0;
    double t = 0.0;
};

int branch_index(Sheet sheet, int sign);
Sheet branch_sheet(int branch);
/// +1 or -1.
int branch_sign(int branch);

/// Point of the circle family T_lambda: radius |lambda| on the plus sheet and
/// 1/|lambda| on the minus sheet.  Throws BadRadius unless -1 <= lambda < 0.
TildePoint circle_point(double lambda, const BranchCoord& coord);
/// Unit circle point (lambda = -1).
TildePoint boundary_point(const BranchCoord& coord);
/// Inverse of boundary_point for a point with u^2 = -1 (up to rounding).
BranchCoord branch_coord_of(const TildePoint& p);

/// (plus and u^2 < -1) or (minus and u^2 > -1).
bool in_disk(const TildePoint& p);

/// A vanishing idempotent component of the hyperbolic Cauchy denominator.
struct SingularPoint {
    BranchCoord coord;
    int component = 1;  // 1 -> p1, 2 -> p2
};

/// Points of the circle where the light cone through u meets it: on the
/// branch with e1 sign s the p1 component vanishes at e^t = -s(u1 - u2) and
/// the p2 component at e^{-t} = -s(u1 + u2).  At most four points.
std::vector<SingularPoint> singular_points(const TildePoint& u);

// --- sections, projections, actions ------------------------------------

/// (1 - |a|^2)^{-1/2} [[1, a], [ā, 1]].  Throws OutOfDomain unless |a| < 1.
SU11 section_disk(Complex a);
/// |1 + u^2|^{-1/2} [[1, u], [-u, 1]] with sign = sign(1 + u^2).
Cl11Matrix section_tilde(const Vector11& u);

/// Inverse of the sections: a = beta / conj(alpha), u = b a^{-1}.
Complex section_inverse(const SU11& g);
Vector11 section_inverse(const Cl11Matrix& g);

/// Subgroup factor r(g) with g = s(s^{-1}(g)) r(g).
SU11 project(const SU11& g);
Cl11Matrix project(const Cl11Matrix& g);

// The coefficient matrix in z -> (alpha z + beta)/(conj(beta) z + conj(alpha))
// is g^{-1}.  The `_by_inverse` variants take that coefficient matrix
// directly; `act_by` takes g itself.
Complex act_by_inverse(const SU11& ginv, Complex z);
Complex act_by(const SU11& g, Complex z);

/// u -> (a u + b)(-b u + a)^{-1}.  The sheet flips when the image passes
/// through the light cone at infinity, i.e. when sign(ginv) * D D̄ < 0 for the
/// denominator D.  Exact light-cone images throw SingularDenominator.
TildePoint act_by_inverse(const Cl11Matrix& ginv, const TildePoint& p);
TildePoint act_by(const Cl11Matrix& g, const TildePoint& p);

/// Upper half plane: z -> (a z + b)/(c z + d).
Complex act_by_inverse(const SL2R& ginv, Complex z);
Complex act_by(const SL2R& g, Complex z);

/// "Left" half plane of R^{1,1}: x -> (a x + b e2)(c e2 x + d)^{-1}.
Vector11 act_tilde_halfplane_by_inverse(const SL2R& ginv, const Vector11& x);
Vector11 act_tilde_halfplane_by(const SL2R& g, const Vector11& x);

/// (1 - |a|^2)^{-2}.
double invariant_density(Complex a);
/// (1 - u1^2 + u2^2)^{-2}.
double invariant_density(const Vector11& u);

}  // namespace r11
