#include "r11/jobs.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "r11/errors.hpp"
#include "r11/moebius.hpp"
#include "r11/taylor.hpp"
#include "r11/transforms.hpp"

namespace r11 {

using nlohmann::json;

namespace {

// --- schema helpers ----------------------------------------------------------

const json& field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw SchemaError(where + ": missing '" + key + "'");
    return obj.at(key);
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) throw SchemaError(where + ": number expected");
    return v.get<double>();
}

double number(const json& obj, const std::string& key, const std::string& where, double fallback) {
    if (!obj.contains(key)) return fallback;
    return number(obj.at(key), where + "." + key);
}

long integer(const json& obj, const std::string& key, const std::string& where, long fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw SchemaError(where + "." + key + ": integer expected");
    return v.get<long>();
}

std::string text(const json& obj, const std::string& key, const std::string& where, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) throw SchemaError(where + "." + key + ": string expected");
    return v.get<std::string>();
}

std::vector<double> numbers(const json& v, std::size_t count, const std::string& where) {
    if (!v.is_array() || (count > 0 && v.size() != count)) {
        throw SchemaError(where + ": array of " + std::to_string(count) + " numbers expected");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Complex complex_value(const json& v, const std::string& where) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    const auto x = numbers(v, 2, where);
    return {x[0], x[1]};
}

const json& array_field(const json& obj, const std::string& key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_array()) throw SchemaError(where + "." + key + ": array expected");
    return v;
}

Sheet sheet_of(const std::string& s, const std::string& where) {
    if (s == "plus") return Sheet::plus;
    if (s == "minus") return Sheet::minus;
    throw SchemaError(where + ": sheet must be 'plus' or 'minus'");
}

const char* sheet_name(Sheet s) { return s == Sheet::plus ? "plus" : "minus"; }

QuadratureSpec quadrature(const json& params) {
    QuadratureSpec q;
    if (!params.contains("quadrature")) return q;
    const json& j = params.at("quadrature");
    const std::string where = "params.quadrature";
    if (!j.is_object()) throw SchemaError(where + ": object expected");
    q.n = std::size_t(integer(j, "n", where, long(q.n)));
    q.t_max = number(j, "t_max", where, q.t_max);
    q.tolerance = number(j, "tolerance", where, q.tolerance);
    q.n_radial = std::size_t(integer(j, "n_radial", where, long(q.n_radial)));
    q.n_angular = std::size_t(integer(j, "n_angular", where, long(q.n_angular)));
    if (j.contains("pv_epsilons")) q.pv_epsilons = numbers(j.at("pv_epsilons"), 0, where + ".pv_epsilons");
    if (j.contains("estimate_truncation")) {
        if (!j.at("estimate_truncation").is_boolean()) throw SchemaError(where + ".estimate_truncation: boolean expected");
        q.estimate_truncation = j.at("estimate_truncation").get<bool>();
    }
    try {
        q.validate();
    } catch (const DomainError& e) {
        throw SchemaError(where + ": " + e.what());
    }
    return q;
}

// --- formatting -------------------------------------------------------------------

std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (const auto& f : flags) out += (out.empty() ? "" : ";") + f;
    return out;
}

/// Class name of a library error ("PVDivergence: ..." -> "PVDivergence").
std::string error_name(const Error& e) {
    const std::string w = e.what();
    return w.substr(0, w.find(':'));
}

struct Row {
    std::string line;
    bool failed = false;
};

std::string row(std::initializer_list<std::string> cells) {
    std::string out;
    for (const auto& c : cells) out += (out.empty() ? "" : ",") + c;
    return out + "\n";
}

JobOutput collect(const std::string& header, std::vector<Row> rows) {
    JobOutput out;
    out.csv = header + "\n";
    for (const Row& r : rows) {
        out.csv += r.line;
        out.failed += r.failed ? 1 : 0;
    }
    out.rows = rows.size();
    out.exit_code = out.rows > 0 && out.failed == out.rows ? 3 : 0;
    return out;
}

template <class Eval>
std::vector<Row> evaluate(std::size_t n, const Eval& eval) {
    std::vector<Row> rows(n);
    parallel_for(n, [&](std::size_t i) { rows[i] = eval(i); });
    return rows;
}

// --- cauchy-disk -----------------------------------------------------------------

CircleFn disk_function(const json& params) {
    const std::string where = "params.function";
    const json& f = field(params, "function", "params");
    const std::string kind = text(f, "kind", where, "");
    if (kind == "fourier") {
        const long k = integer(f, "k", where, 0);
        const Complex amp = f.contains("amplitude") ? complex_value(f.at("amplitude"), where + ".amplitude") : 1.0;
        return [k, amp](double phi) { return amp * std::polar(1.0, double(k) * phi); };
    }
    if (kind == "polynomial") {
        std::vector<Complex> c;
        const json& cs = array_field(f, "coefficients", where);
        for (std::size_t i = 0; i < cs.size(); ++i) c.push_back(complex_value(cs[i], where + ".coefficients"));
        return [c](double phi) {
            Complex acc{};
            for (std::size_t n = c.size(); n-- > 0;) acc = acc * std::polar(1.0, phi) + c[n];
            return acc;
        };
    }
    throw SchemaError(where + ".kind: 'fourier' or 'polynomial' expected");
}

std::vector<Complex> disk_points(const JobSpec& job) {
    const json& pts = field(job.params, "points", "params");
    std::vector<Complex> out;
    if (pts.is_object()) {
        const long count = integer(pts, "random", "params.points", -1);
        const double radius = number(pts, "radius", "params.points", 0.9);
        if (count < 0) throw SchemaError("params.points: 'random' count expected");
        std::mt19937_64 rng(job.seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (long i = 0; i < count; ++i) {
            const double r = radius * std::sqrt(u(rng));
            out.push_back(std::polar(r, 2.0 * 3.14159265358979323846 * u(rng)));
        }
        return out;
    }
    if (!pts.is_array()) throw SchemaError("params.points: array or {random, radius} expected");
    for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(complex_value(pts[i], "params.points"));
    return out;
}

JobOutput run_cauchy_disk(const JobSpec& job) {
    const CircleFn f = disk_function(job.params);
    const QuadratureSpec q = quadrature(job.params);
    const auto pts = disk_points(job);
    const auto rows = evaluate(pts.size(), [&](std::size_t i) {
        const Complex a = pts[i];
        const std::string head = std::to_string(i) + "," + format_double(a.real()) + "," + format_double(a.imag());
        try {
            const TransformResult r = cauchy_disk(f, a, q);
            return Row{row({head, format_double(r.value.real()), format_double(r.value.imag()),
                            format_double(r.normalized.real()), format_double(r.normalized.imag()),
                            format_double(r.error_estimate), join_flags(r.flags)})};
        } catch (const Error& e) {
            const std::string nan = format_double(NAN);
            return Row{row({head, nan, nan, nan, nan, nan, error_name(e)}), true};
        }
    });
    return collect("index,a_re,a_im,value_re,value_im,normalized_re,normalized_im,error_estimate,flags", rows);
}

// --- cauchy-r11 --------------------------------------------------------------------

TildeFn tilde_function(const json& params) {
    const std::string where = "params.function";
    const json& f = field(params, "function", "params");
    const std::string kind = text(f, "kind", where, "");
    const long branch = integer(f, "branch", where, 0);
    if (branch < -1 || branch > 3) throw SchemaError(where + ".branch: 0..3 or -1 for all");
    const auto on = [branch](int b) { return branch == -1 || b == branch; };
    if (kind == "gaussian") {
        const double center = number(f, "center", where, 0.0);
        const double width = number(f, "width", where, 1.0);
        const double p1 = number(f, "p1", where, 1.0);
        const double p2 = number(f, "p2", where, 1.0);
        if (!(width > 0.0)) throw SchemaError(where + ".width: positive number expected");
        return [=](const BranchCoord& v) {
            if (!on(v.branch)) return EvenNumber{0.0};
            const double x = (v.t - center) / width;
            const double g = std::exp(-x * x);
            return EvenNumber{p1 * g, p2 * g};
        };
    }
    if (kind == "power_window") {
        const double p = number(f, "p", where, 0.0);
        const double half = number(f, "halfwidth", where, 2.0);
        if (!(half > 0.0)) throw SchemaError(where + ".halfwidth: positive number expected");
        return [=](const BranchCoord& v) {
            if (!on(v.branch) || !(std::abs(v.t) < half)) return EvenNumber{0.0};
            const double w = std::exp(-1.0 / (1.0 - v.t * v.t / (half * half)));
            return EvenNumber{std::exp(-p * v.t) * w, std::exp(p * v.t) * w};
        };
    }
    throw SchemaError(where + ".kind: 'gaussian' or 'power_window' expected");
}

std::vector<TildePoint> tilde_points(const json& params) {
    const json& pts = array_field(params, "points", "params");
    std::vector<TildePoint> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string where = "params.points[" + std::to_string(i) + "]";
        const auto u = numbers(field(pts[i], "u", where), 2, where + ".u");
        out.push_back({sheet_of(text(pts[i], "sheet", where, "plus"), where), {u[0], u[1]}});
    }
    return out;
}

JobOutput run_cauchy_r11(const JobSpec& job) {
    const TildeFn f = tilde_function(job.params);
    const QuadratureSpec q = quadrature(job.params);
    const double sigma = number(job.params, "sigma", "params", 0.0);
    const auto pts = tilde_points(job.params);
    const auto rows = evaluate(pts.size(), [&](std::size_t i) {
        const TildePoint& u = pts[i];
        const std::string head = std::to_string(i) + "," + sheet_name(u.sheet) + "," + format_double(u.u.u1) + "," +
                                 format_double(u.u.u2);
        try {
            const TransformResult r = cauchy_tilde_pv(sigma, f, u, q);
            return Row{row({head, format_double(r.even.a1), format_double(r.even.a2), format_double(r.error_estimate),
                            format_double(r.pv_epsilon), join_flags(r.flags)})};
        } catch (const Error& e) {
            const std::string nan = format_double(NAN);
            std::vector<std::string> flags;
            if (std::abs(std::abs(u.u.u1) - std::abs(u.u.u2)) < 1e-3) flags.emplace_back("near_light_cone_locus");
            flags.push_back(error_name(e));
            return Row{row({head, nan, nan, nan, nan, join_flags(flags)}), true};
        }
    });
    return collect("index,sheet,u1,u2,p1,p2,error_estimate,pv_epsilon,flags", rows);
}

// --- taylor ------------------------------------------------------------------------

JobOutput run_taylor(const JobSpec& job) {
    const json& params = job.params;
    const std::string mode = text(params, "mode", "params", "");
    const json& pts = array_field(params, "points", "params");
    const std::string nan = format_double(NAN);
    if (mode == "laplace") {
        std::vector<std::vector<double>> akt;
        for (std::size_t i = 0; i < pts.size(); ++i) akt.push_back(numbers(pts[i], 3, "params.points"));
        const auto rows = evaluate(akt.size(), [&](std::size_t i) {
            const auto& p = akt[i];
            const std::string head = std::to_string(i) + "," + format_double(p[0]) + "," + format_double(p[1]) + "," +
                                     format_double(p[2]);
            try {
                const LaplaceCheck c = laplace_table_check(p[0], p[1], p[2]);
                return Row{row({head, format_double(c.lhs), format_double(c.rhs), format_double(c.error),
                                std::to_string(c.intervals), ""})};
            } catch (const Error& e) {
                return Row{row({head, nan, nan, nan, "0", error_name(e)}), true};
            }
        });
        return collect("index,a,k,t,lhs,rhs,error,intervals,flags", rows);
    }
    if (mode == "hyperbolic" || mode == "geometric") {
        const int terms = int(integer(params, "terms", "params", 200));
        struct Pt {
            TildePoint u;
            double t;
        };
        std::vector<Pt> list;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::string where = "params.points[" + std::to_string(i) + "]";
            const auto u = numbers(field(pts[i], "u", where), 2, where + ".u");
            list.push_back({{Sheet::plus, {u[0], u[1]}}, number(field(pts[i], "t", where), where + ".t")});
        }
        const bool geometric = mode == "geometric";
        const auto rows = evaluate(list.size(), [&](std::size_t i) {
            const Pt& p = list[i];
            const std::string head = std::to_string(i) + "," + format_double(p.u.u.u1) + "," + format_double(p.u.u.u2) +
                                     "," + format_double(p.t);
            try {
                const EvenNumber k = kernel_tilde(p.u, {0, p.t}, 0.0);
                if (geometric) {
                    const GeometricExpansion g = geometric_expand(p.u, p.t, terms);
                    const EvenNumber s = g.partial_sums.back();
                    return Row{row({head, format_double(s.a1), format_double(s.a2), format_double(k.a1),
                                    format_double(k.a2), format_double(g.ratio), ""})};
                }
                const EvenNumber h = hyperbolic_expand(p.u, p.t);
                return Row{row({head, format_double(h.a1), format_double(h.a2), format_double(k.a1),
                                format_double(k.a2), ""})};
            } catch (const Error& e) {
                if (geometric) return Row{row({head, nan, nan, nan, nan, nan, error_name(e)}), true};
                return Row{row({head, nan, nan, nan, nan, error_name(e)}), true};
            }
        });
        return collect(geometric ? "index,u1,u2,t,p1,p2,kernel_p1,kernel_p2,ratio,flags"
                                 : "index,u1,u2,t,p1,p2,kernel_p1,kernel_p2,flags",
                       rows);
    }
    throw SchemaError("params.mode: 'laplace', 'hyperbolic' or 'geometric' expected");
}

// --- dumps --------------------------------------------------------------------

struct BranchGrid {
    std::size_t per_branch;
    double t_max;
};

BranchGrid branch_grid(const json& params) {
    const long n = integer(params, "points_per_branch", "params", 100);
    const double t_max = number(params, "t_max", "params", 4.0);
    if (n < 2) throw SchemaError("params.points_per_branch: at least 2");
    if (!(t_max > 0.0)) throw SchemaError("params.t_max: positive number expected");
    return {std::size_t(n), t_max};
}

double grid_t(const BranchGrid& g, std::size_t j) {
    return -g.t_max + 2.0 * g.t_max * double(j) / double(g.per_branch - 1);
}

JobOutput dump_kernel(const JobSpec& job) {
    const auto u = numbers(field(job.params, "u", "params"), 2, "params.u");
    const TildePoint p{sheet_of(text(job.params, "sheet", "params", "plus"), "params.sheet"), {u[0], u[1]}};
    const double sigma = number(job.params, "sigma", "params", 0.0);
    const BranchGrid g = branch_grid(job.params);
    const auto rows = evaluate(4 * g.per_branch, [&](std::size_t i) {
        const int b = int(i / g.per_branch);
        const double t = grid_t(g, i % g.per_branch);
        const std::string head = std::to_string(b) + "," + format_double(t);
        try {
            const EvenNumber k = kernel_tilde(p, {b, t}, sigma);
            return Row{row({head, format_double(k.a1), format_double(k.a2)})};
        } catch (const Error&) {
            return Row{row({head, format_double(NAN), format_double(NAN)}), true};
        }
    });
    JobOutput out = collect("branch,t,p1,p2", rows);
    out.exit_code = 0;  // singular samples are data, not failures
    return out;
}

JobOutput dump_geometry(const JobSpec& job) {
    const double lambda = number(field(job.params, "lambda", "params"), "params.lambda");
    if (!(lambda >= -1.0 && lambda < 0.0)) throw SchemaError("params.lambda: -1 <= lambda < 0 expected");
    const BranchGrid g = branch_grid(job.params);
    const auto rows = evaluate(4 * g.per_branch, [&](std::size_t i) {
        const int b = int(i / g.per_branch);
        const double t = grid_t(g, i % g.per_branch);
        const TildePoint p = circle_point(lambda, {b, t});
        return Row{row({std::to_string(b), format_double(t), sheet_name(p.sheet), format_double(p.u.u1),
                        format_double(p.u.u2)})};
    });
    return collect("branch,t,sheet,u1,u2", rows);
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"verify", "cauchy-disk", "cauchy-r11", "taylor", "kernel-dump", "geometry-dump"};
    return c;
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::size_t thread_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("R11_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<std::size_t>(n, std::size_t(cap));
    }
    return n;
}

JobSpec parse_job(const json& j) {
    if (!j.is_object()) throw SchemaError("job: object expected");
    JobSpec job;
    job.command = text(j, "command", "job", "");
    if (std::find(commands().begin(), commands().end(), job.command) == commands().end()) {
        throw SchemaError("job.command: unknown command '" + job.command + "'");
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
            throw SchemaError("job.seed: integer expected");
        }
        job.seed = j.at("seed").get<std::uint64_t>();
    }
    job.output = text(j, "output", "job", "");
    if (j.contains("params")) {
        if (!j.at("params").is_object()) throw SchemaError("job.params: object expected");
        job.params = j.at("params");
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "command" && key != "seed" && key != "output" && key != "params") {
            throw SchemaError("job: unknown field '" + key + "'");
        }
    }
    return job;
}

void apply_override(json& job, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) throw SchemaError("override '" + assignment + "': key=value expected");
    const std::string key = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;
    json* node = &job;
    std::stringstream path(key);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(path, part, '.')) parts.push_back(part);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (!node->is_object()) throw SchemaError("override '" + key + "': not an object path");
        node = &(*node)[parts[i]];
        if (node->is_null()) *node = json::object();
    }
    if (!node->is_object() || parts.empty() || parts.back().empty()) {
        throw SchemaError("override '" + key + "': not an object path");
    }
    (*node)[parts.back()] = value;
}

JobSpec load_job(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read job file '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw SchemaError("job file '" + path + "' is not valid JSON");
    for (const auto& o : overrides) apply_override(j, o);
    return parse_job(j);
}

JobOutput run_transform(const JobSpec& job) {
    if (job.command == "cauchy-disk") return run_cauchy_disk(job);
    if (job.command == "cauchy-r11") return run_cauchy_r11(job);
    if (job.command == "taylor") return run_taylor(job);
    throw SchemaError("transform: command must be cauchy-disk, cauchy-r11 or taylor");
}

JobOutput run_dump(DumpKind kind, const JobSpec& job) {
    if (kind == DumpKind::kernel) {
        if (job.command != "kernel-dump") throw SchemaError("dump --kind kernel needs command 'kernel-dump'");
        return dump_kernel(job);
    }
    if (job.command != "geometry-dump") throw SchemaError("dump --kind geometry needs command 'geometry-dump'");
    return dump_geometry(job);
}

}  // namespace r11
