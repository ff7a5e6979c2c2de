#include "r11/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <random>

#include "r11/errors.hpp"
#include "r11/moebius.hpp"
#include "r11/operators.hpp"
#include "r11/representations.hpp"
#include "r11/taylor.hpp"
#include "r11/transforms.hpp"

namespace r11 {

namespace {

constexpr double kPi = std::numbers::pi;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double integer(int lo, int hi) { return double(std::uniform_int_distribution<int>(lo, hi)(rng_)); }

    Cliff11 integer_element() { return {integer(-9, 9), integer(-9, 9), integer(-9, 9), integer(-9, 9)}; }

    /// a in [1/2, 2] and d solved from the determinant.
    SL2R sl2r(double spread = 1.0) {
        const double a = std::exp(uniform(-std::log(2.0), std::log(2.0)) * spread);
        const double b = uniform(-spread, spread);
        const double c = uniform(-spread, spread);
        return {a, b, c, (1.0 + b * c) / a};
    }

    Complex disk_point(double rmax) { return std::polar(std::sqrt(uniform(0, 1)) * rmax, uniform(0, 2 * kPi)); }

private:
    std::mt19937_64 rng_;
};

Check make(std::string name, double error, double tolerance) {
    return {std::move(name), error, tolerance, std::isfinite(error) && error <= tolerance};
}

double diff(const Cliff11& x, const Cliff11& y) { return (x - y).max_abs(); }
double diff(const EvenNumber& x, const EvenNumber& y) { return (x - y).max_abs(); }
double diff(const SU11& x, const SU11& y) { return std::max(std::abs(x.alpha - y.alpha), std::abs(x.beta - y.beta)); }
double diff(const Cl11Matrix& x, const Cl11Matrix& y) {
    return std::max({diff(x.a, y.a), std::abs(x.b.u1 - y.b.u1), std::abs(x.b.u2 - y.b.u2)});
}

// --- suites ------------------------------------------------------------------------

std::vector<Check> clifford_suite(Sampler& s) {
    const Cliff11 one{1.0};
    const Cliff11 e1 = Cliff11::e1();
    const Cliff11 e2 = Cliff11::e2();
    const double relations =
        std::max({diff(e1 * e1, -one), diff(e2 * e2, one), diff(e1 * e2 + e2 * e1, Cliff11{}), diff(e1 * e2, Cliff11::e12())});

    double assoc = 0.0;
    double distributive = 0.0;
    double norm = 0.0;
    double inverse_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Cliff11 x = s.integer_element();
        const Cliff11 y = s.integer_element();
        const Cliff11 z = s.integer_element();
        assoc = std::max(assoc, diff((x * y) * z, x * (y * z)));
        distributive = std::max(distributive, diff(x * (y + z), x * y + x * z));
        norm = std::max(norm, std::abs((x * y).norm_scalar() - x.norm_scalar() * y.norm_scalar()));
        if (std::abs(x.norm_scalar()) >= 1.0) inverse_err = std::max(inverse_err, diff(x * inverse(x), one));
    }

    const EvenNumber p1 = EvenNumber::p1();
    const EvenNumber p2 = EvenNumber::p2();
    const double idem = std::max({diff(p1 * p1, p1), diff(p2 * p2, p2), diff(p1 * p2, EvenNumber{0.0}),
                                  diff(p1.cliff(), Cliff11{0.5, 0, 0, 0.5})});
    double exp_err = 0.0;
    for (const double t : {-2.0, -0.5, 0.0, 0.7, 3.0}) {
        const Cliff11 series{std::cosh(t), 0, 0, std::sinh(t)};
        exp_err = std::max(exp_err, diff(exp_bivector(t).cliff(), series) / std::cosh(t));
    }
    return {make("generator relations", relations, 0.0),
            make("associativity on 1000 integer triples", assoc, 0.0),
            make("distributivity on 1000 integer triples", distributive, 0.0),
            make("multiplicative norm", norm, 0.0),
            make("inverse", inverse_err, 1e-13),
            make("idempotents", idem, 0.0),
            make("bivector exponential", exp_err, 1e-15)};
}

std::vector<Check> moebius_suite(Sampler& s) {
    double su11_hom = 0.0;
    double cayley_hom = 0.0;
    double pseudodet = 0.0;
    double sections = 0.0;
    double action = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SL2R x = s.sl2r();
        const SL2R y = s.sl2r();
        su11_hom = std::max(su11_hom, diff(to_su11(x * y), to_su11(x) * to_su11(y)));
        cayley_hom = std::max(cayley_hom, diff(cayley(x * y), cayley(x) * cayley(y)));
        pseudodet = std::max(pseudodet, std::abs(cayley(x).pseudodet() - 1.0));
        const SU11 g = to_su11(x);
        sections = std::max(sections, diff(section_disk(section_inverse(g)) * project(g), g));
        const Complex a = s.disk_point(0.9);
        // Coefficient matrix g^{-1}: a right action.
        action = std::max(action, std::abs(act_by(g * to_su11(y), a) - act_by(to_su11(y), act_by(g, a))));
    }
    const Cl11Matrix worked = cayley({2, 1, 1, 1});
    const double worked_err = std::max({std::abs(worked.pseudodet() - 1.0), std::abs(worked.a.scalar() - 1.5),
                                        std::abs(worked.a.bivector() + 0.5), std::abs(worked.b.u1 - 1.0),
                                        std::abs(worked.b.u2)});

    double density = 0.0;
    for (int i = 0; i < 200; ++i) {
        const SU11 g = to_su11(s.sl2r(0.7));
        const Complex a = s.disk_point(0.8);
        // |dw/da|^2 for w = (alpha a + beta) / (conj(beta) a + conj(alpha)) is |conj(beta) a + conj(alpha)|^{-4}.
        const double jac = std::pow(std::abs(std::conj(g.beta) * a + std::conj(g.alpha)), -4.0);
        const double lhs = invariant_density(act_by_inverse(g, a)) * jac;
        density = std::max(density, std::abs(lhs - invariant_density(a)) / invariant_density(a));
    }
    return {make("SU(1,1) homomorphism", su11_hom, 1e-10),
            make("Cayley homomorphism", cayley_hom, 1e-10),
            make("Cayley pseudodeterminant", pseudodet, 1e-10),
            make("Cayley of [[2,1],[1,1]]", worked_err, 1e-15),
            make("section factorization", sections, 1e-10),
            make("disk action composes", action, 1e-12),
            make("disk measure invariance", density, 1e-10)};
}

std::vector<Check> representations_suite(Sampler& s) {
    const CircleFn f = [](double phi) { return std::polar(1.0, phi) - Complex{0.0, 0.4} * std::polar(1.0, -3 * phi) + 0.2; };
    const TildeFn bump = [](const BranchCoord& v) {
        return EvenNumber{std::exp(-v.t * v.t) * (1 + v.branch), 1.0 / std::cosh(v.t)};
    };
    double hom = 0.0;
    double unitary = 0.0;
    double sigma_hom = 0.0;
    double one_param_err = 0.0;
    const auto norm2 = [](const CircleFn& g) {
        double acc = 0.0;
        for (int j = 0; j < 4096; ++j) acc += std::norm(g(2 * kPi * j / 4096));
        return acc * 2 * kPi / 4096;
    };
    for (int i = 0; i < 20; ++i) {
        const SU11 g = to_su11(s.sl2r(0.8));
        const SU11 k = to_su11(s.sl2r(0.8));
        unitary = std::max(unitary, std::abs(norm2(pi1(g, f)) - norm2(f)));
        for (const double phi : {0.1, 1.3, 5.0}) hom = std::max(hom, std::abs(pi1(g, pi1(k, f))(phi) - pi1(g * k, f)(phi)));

        const double ta = s.uniform(-0.5, 0.5);
        const double tb = s.uniform(-0.5, 0.5);
        const Cl11Matrix ga{exp_bivector(ta), {}, 1};
        const Cl11Matrix gb{exp_bivector(tb), {}, 1};
        for (const double sigma : {0.0, 0.5}) {
            for (const BranchCoord v : {BranchCoord{0, 0.3}, BranchCoord{3, -1.1}}) {
                const EvenNumber lhs = pisigma(sigma, ga, pisigma(sigma, gb, bump))(v);
                sigma_hom = std::max(sigma_hom, diff(lhs, pisigma(sigma, ga * gb, bump)(v)));
            }
        }
        const LieElement x{s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
        const double t1 = s.uniform(-1, 1);
        const double t2 = s.uniform(-1, 1);
        const SL2R lhs = one_param(x, t1) * one_param(x, t2);
        const SL2R rhs = one_param(x, t1 + t2);
        one_param_err = std::max({one_param_err, std::abs(lhs.a - rhs.a), std::abs(lhs.b - rhs.b),
                                  std::abs(lhs.c - rhs.c), std::abs(lhs.d - rhs.d)});
    }
    return {make("mock discrete series homomorphism", hom, 1e-12),
            make("mock discrete series unitarity", unitary, 1e-6),
            make("hyperbolic series homomorphism on subgroup A", sigma_hom, 1e-12),
            make("one-parameter subgroups", one_param_err, 1e-12)};
}

std::vector<Check> transforms_suite(Sampler& s) {
    QuadratureSpec q;
    q.n = 2048;
    double cauchy = 0.0;
    double anti = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Complex a = s.disk_point(0.9);
        for (int k = 0; k <= 8; ++k) {
            const CircleFn fk = [k](double phi) { return std::polar(1.0, k * phi); };
            const Complex expected = std::pow(a, k);
            cauchy = std::max(cauchy, std::abs(cauchy_disk(fk, a, q).normalized - expected) / (std::abs(expected) + 1e-6));
            if (k > 0) {
                const CircleFn ak = [k](double phi) { return std::polar(1.0, -k * phi); };
                anti = std::max(anti, std::abs(cauchy_disk(ak, a, q).normalized));
            }
        }
    }

    double kernel = 0.0;
    for (int tested = 0; tested < 100;) {
        const TildePoint u{Sheet::plus, {s.uniform(-3, 3), s.uniform(-3, 3)}};
        const BranchCoord v{int(s.integer(0, 3)), s.uniform(-3, 3)};
        const Cliff11 den = exp_bivector(v.t).cliff() - double(branch_sign(v.branch)) * (Cliff11::e1() * u.u.cliff());
        if (std::abs(den.norm_scalar()) < 1e-6) continue;
        kernel = std::max(kernel, diff(den * kernel_tilde(u, v).cliff(), Cliff11{1.0}));
        ++tested;
    }

    const CircleFn f = [](double phi) { return std::polar(1.0, phi) * 0.5 + std::polar(0.3, -2 * phi) + 0.2; };
    std::vector<Complex> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(s.disk_point(0.7));
    double intertwining = 0.0;
    for (int i = 0; i < 5; ++i) {
        intertwining = std::max(intertwining, intertwining_residual(to_su11(s.sl2r(0.8)), f, pts, 1024).residual);
    }
    return {make("Cauchy integral of e^{ik phi}, k <= 8, |a| <= 0.9", cauchy, 1e-8),
            make("Cauchy integral of anti-holomorphic modes", anti, 1e-8),
            make("hyperbolic kernel times its denominator", kernel, 1e-12),
            make("disk intertwining", intertwining, 1e-5)};
}

std::vector<Check> operators_suite(Sampler& s) {
    // f(z) = z^2 on H: rho(A) f = 2y f_y = 4 i y z, rho(B) f = 2y f_x = 4 y z.
    const ScalarField f = complex_field(FieldDomain::halfplane, [](Complex z) { return z * z; });
    double closed = 0.0;
    double flows = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Vector11 p{s.uniform(-2, 2), s.uniform(0.2, 2)};
        const Complex z{p.u1, p.u2};
        const double scale = 1 + 4 * p.u2 * std::abs(z);
        closed = std::max(closed, std::abs(rho_generator(Generator::A, f, p) - Complex{0, 4} * p.u2 * z) / scale);
        closed = std::max(closed, std::abs(rho_generator(Generator::B, f, p) - 4.0 * p.u2 * z) / scale);
        for (const Generator g : {Generator::A, Generator::B}) {
            const Complex fd = rho_generator(g, f, p, Method::finite_difference, 1e-4);
            flows = std::max(flows, std::abs(fd - rho_generator(g, f, p)) / (1 + std::abs(fd)));
        }
    }
    std::vector<Vector11> grid;
    for (int i = 0; i < 8; ++i) {
        const Complex a = s.disk_point(0.6);
        grid.push_back({a.real(), a.imag()});
    }
    const CircleFn boundary = [](double phi) { return std::polar(1.0, 2 * phi) - 0.3 * std::polar(1.0, phi); };
    const AnnihilationReport disk = annihilation_residual(boundary, grid);
    return {make("closed-form generators on H", closed, 1e-8),
            make("generators against their flows", flows, 1e-6),
            make("disk Dirac operator annihilates Cauchy transforms", disk.max_residual, 1e-5)};
}

std::vector<Check> taylor_suite(Sampler& s) {
    double laplace = 0.0;
    for (const double a : {-0.7, 0.0, 0.5, 1.0, 1.2}) {
        for (const double k : {0.5, 1.0, 2.0}) {
            for (const double t : {0.5, 1.0, 1.5, 2.0, 3.0}) laplace = std::max(laplace, laplace_table_check(a, k, t).error);
        }
    }
    double hyperbolic = 0.0;
    double geometric = 0.0;
    for (int tested = 0; tested < 400;) {
        const double t = s.uniform(-2, 2);
        const TildePoint u{Sheet::plus, {s.uniform(-3, 3), s.uniform(-3, 3)}};
        const EvenNumber c = e1u_components(u.u);
        const double m1 = std::abs(c.a1) * std::exp(-t);
        const double m2 = std::abs(c.a2) * std::exp(t);
        if (std::abs(t) < 0.05 || m1 > 0.9 || m2 > 0.9 || std::abs(c.a1 - 1) < 0.05 || std::abs(c.a2 - 1) < 0.05) continue;
        const EvenNumber k = kernel_tilde(u, {0, t});
        const double scale = 1 + k.max_abs();
        hyperbolic = std::max(hyperbolic, diff(hyperbolic_expand(u, t), k) / scale);
        geometric = std::max(geometric, diff(geometric_expand(u, t, 400).partial_sums.back(), k) / scale);
        ++tested;
    }
    double classical = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Complex a = s.disk_point(0.5);
        const double phi = s.uniform(0, 2 * kPi);
        const ClassicalExpansion e = classical_expand(a, phi, 80);
        classical = std::max(classical, std::abs(e.partial_sums.back() - e.reference));
    }
    return {make("integer-part Laplace identity", laplace, 1e-10),
            make("continuous kernel decomposition", hyperbolic, 1e-8),
            make("geometric kernel decomposition", geometric, 1e-8),
            make("classical coherent-state expansion", classical, 1e-12)};
}

using SuiteFn = std::function<std::vector<Check>(Sampler&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> list{
        {"clifford", clifford_suite},   {"moebius", moebius_suite},     {"representations", representations_suite},
        {"transforms", transforms_suite}, {"operators", operators_suite}, {"taylor", taylor_suite}};
    return list;
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites()) out.push_back(name);
        return out;
    }();
    return names;
}

bool known_suite(const std::string& name) {
    return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<SuiteReport> run_verify(const std::string& suite, std::uint64_t seed) {
    if (!known_suite(suite)) throw DomainError("unknown suite '" + suite + "'");
    std::vector<SuiteReport> out;
    for (const auto& [name, fn] : suites()) {
        if (suite != "all" && suite != name) continue;
        Sampler sampler(seed);
        SuiteReport r{name, {}};
        try {
            r.checks = fn(sampler);
        } catch (const Error& e) {
            r.checks.push_back({std::string("raised ") + e.what(), INFINITY, 0.0, false});
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed) {
    nlohmann::json j;
    j["seed"] = seed;
    bool all = true;
    j["suites"] = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            // JSON has no infinity; a non-finite error is reported as null.
            checks.push_back({{"name", c.name},
                              {"error", std::isfinite(c.error) ? nlohmann::json(c.error) : nlohmann::json()},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass}});
        }
        all = all && r.pass();
        j["suites"].push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}});
    }
    j["pass"] = all;
    return j.dump(2);
}

}  // namespace r11
