#pragma once

// Reduced wavelet transforms: the Cauchy integral on the circle, the weighted
// Bergman transform on the disk and the principal-value hyperbolic Cauchy
// transform on the four-branch unit circle.

#include <string>
#include <vector>

#include "r11/clifford.hpp"
#include "r11/moebius.hpp"
#include "r11/representations.hpp"

namespace r11 {

struct QuadratureSpec {
    enum class Rule { trapezoid, adaptive };

    std::size_t n = 1024;  // points on the circle
    double t_max = 12.0;   // branch truncation
    std::vector<double> pv_epsilons = default_pv_epsilons();
    Rule rule = Rule::adaptive;
    std::size_t n_radial = 200;   // Bergman radial nodes (multiple of 20)
    std::size_t n_angular = 200;  // Bergman angular nodes
    double tolerance = 1e-12;     // adaptive rule, relative
    bool estimate_truncation = false;

    /// 0.1 * 2^{-k}, k = 0..6.
    static std::vector<double> default_pv_epsilons();
    /// Throws DomainError unless n >= 16 and the radii decrease strictly to > 0.
    void validate() const;
};

struct TransformResult {
    Complex value{};       // raw transform, scalar cases
    Complex normalized{};  // value divided by the analytic normalization
    EvenNumber even{};     // hyperbolic case
    double error_estimate = 0.0;
    double pv_epsilon = 0.0;  // smallest excision radius used, 0 if not a PV integral
    /// |A_k - A_{k-1}| for successive excision radii (first-order Richardson
    /// error estimates of the partial results A_k).
    std::vector<double> pv_error_sequence;
    std::vector<std::string> flags;
};

// --- circle and disk -----------------------------------------------------

/// W f(a) = <f, pi_1(s(a)) f0> = int f(phi) sqrt(1-|a|^2)/(1 - a e^{-i phi}) dphi by
/// the trapezoid rule; normalized = W f(a) / (2 pi sqrt(1-|a|^2)).
TransformResult cauchy_disk(const CircleFn& f, Complex a, const QuadratureSpec& q = {});
TransformResult cauchy_disk(const BoundaryFunction& f, Complex a);

/// (1-|a|^2)^{m/2} 4^{1-m} int_D f(w) (1 - a conj(w))^{-m} (1-|w|^2)^{m-2} dw;
/// normalized divides by (1-|a|^2)^{m/2} 4^{1-m} pi/(m-1).
TransformResult bergman(int m, const DiskFn& f, Complex a, const QuadratureSpec& q = {});
double bergman_normalization(int m, Complex a);

// --- hyperbolic ------------------------------------------------------------

/// (-u s e1 z + 1)^sigma (-s e1 u + z)^{-1-sigma}, z = e^{e12 t}, s the e1 sign
/// of the branch.  For sigma = 0 this is p1/(e^t + s(u1-u2)) + p2/(e^{-t} + s(u1+u2)).
/// Throws LightConeSingularity at singular coordinates.
EvenNumber kernel_tilde(const TildePoint& u, const BranchCoord& v, double sigma = 0.0);

/// Integrand of W_sigma without the |1+u^2|^{1/2} prefactor:
/// (-u v + 1)^sigma (-v u + 1)^{-1-sigma} = kernel_tilde * z^{1+sigma}, v = s e1 z.
EvenNumber sio_integrand(const TildePoint& u, const BranchCoord& v, double sigma = 0.0);

/// W_sigma f(u) = |1+u^2|^{1/2} sum_branches PV int sio_integrand f dt over
/// [-t_max, t_max].  Each singular point is excised symmetrically with the
/// radii q.pv_epsilons; the partial results are Richardson-extrapolated in
/// odd powers of epsilon.  Throws PVDivergence when the partial results do
/// not settle and OutOfDomain unless u lies in the open disk.
TransformResult cauchy_tilde_pv(double sigma, const TildeFn& f, const TildePoint& u, const QuadratureSpec& q = {});
TransformResult cauchy_tilde_pv(double sigma, const BoundaryFunction& f, const TildePoint& u,
                                const QuadratureSpec& q = {});

/// |lambda|^{-2} sum_branches int |F(b, t)|^2 r dt on [-t_max, t_max], with r
/// the radius of the branch (|lambda| on the plus sheet, 1/|lambda| on the minus
/// sheet) and |F|^2 = (F1^2 + F2^2)/2.  Throws BadRadius.
double hardy_norm(const TildeFn& f, double lambda, double t_max = 12.0);

// --- intertwining ----------------------------------------------------------

struct IntertwiningResult {
    double residual = 0.0;
    double error_estimate = 0.0;  // largest quadrature/PV estimate involved
};

/// max_a |W(pi_1(g) f)(a) - [pi_Omega(g) W f](a)| with
/// [pi_Omega(g) F](a) = conj(chi(h)) F(a'), g^{-1} s(a) = s(a') h.
IntertwiningResult intertwining_residual(const SU11& g, const CircleFn& f, const std::vector<Complex>& points,
                                         std::size_t n);

/// Same for pi_sigma and g = diag(w, w)^{-1}, w = e^{e12 tau}.
IntertwiningResult intertwining_residual(double sigma, const Cl11Matrix& g, const TildeFn& f,
                                         const std::vector<TildePoint>& points, const QuadratureSpec& q = {});

/// The point a' and subgroup factor h of g^{-1} s(a) = s(a') h.
std::pair<Complex, SU11> omega_action(const SU11& g, Complex a);
std::pair<TildePoint, Cl11Matrix> omega_action(const Cl11Matrix& g, const TildePoint& u);

}  // namespace r11
