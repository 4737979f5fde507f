// gftkit: command-line front end for the shell-function toolkit. Renders
// coefficient bounds, Fekete-Szego data, curve samples, Fibonacci tables,
// shell-function coefficients, expansion diagnostics, and the verification
// suites in table, JSON, or CSV form.
//
// Exit codes: 0 success, 1 verification violations, 2 usage or domain error,
// 3 I/O error. The GFTKIT_SEED environment variable overrides --seed.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gft/caratheodory.hpp"
#include "gft/pseudo.hpp"
#include "gft/series.hpp"
#include "gft/shell.hpp"
#include "gft/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using gft::series::cplx;

/// 10 significant digits, locale-independent.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void pad_to(std::string& line, std::size_t width) {
    if (line.size() < width)
        line.append(width - line.size(), ' ');
    line += "  ";
}

/// Aligned-column rendering; cells carry pre-formatted text.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            if (i + 1 < row.size()) pad_to(cell, widths[i]);
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_csv(const std::string& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::string out = header + "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i];
        }
        out += "\n";
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream ofs(out_path, std::ios::binary);
    if (!ofs) throw std::runtime_error("cannot open output file: " + out_path);
    ofs << text;
    ofs.flush();
    if (!ofs) throw std::runtime_error("cannot write output file: " + out_path);
}

void require_lambda(double lambda) {
    if (!(lambda >= 1.0))
        throw std::invalid_argument("lambda must satisfy λ ≥ 1 (got " + fmt(lambda) +
                                    ")");
}

json bounds_json(double lambda, double mu, const gft::pseudo::BoundSet& b) {
    json j;
    j["lambda"] = lambda;
    j["mu"] = mu;
    j["a2_bound"] = b.a2_bound;
    j["a2_simple_bound"] = b.a2_simple_bound;
    j["a3_bound"] = b.a3_bound;
    j["fs_h"] = b.fs_h;
    j["fs_threshold"] = b.fs_threshold;
    j["fs_bound"] = b.fs_bound;
    return j;
}

std::vector<std::string> bounds_csv_row(double lambda, const gft::pseudo::BoundSet& b) {
    return {fmt(lambda),       fmt(b.a2_bound), fmt(b.a2_simple_bound),
            fmt(b.a3_bound), fmt(b.fs_h),     fmt(b.fs_bound)};
}

constexpr const char* bounds_csv_header = "lambda,a2_bound,a2_simple,a3_bound,fs_h,fs_bound";

std::string cmd_bounds(double lambda, double mu, const std::string& format) {
    require_lambda(lambda);
    const gft::pseudo::BoundSet b = gft::pseudo::make_bounds({lambda, mu});
    if (format == "json") return bounds_json(lambda, mu, b).dump() + "\n";
    if (format == "csv") return render_csv(bounds_csv_header, {bounds_csv_row(lambda, b)});
    return render_table({{"lambda", fmt(lambda)},
                         {"mu", fmt(mu)},
                         {"a2_bound", fmt(b.a2_bound)},
                         {"a2_simple_bound", fmt(b.a2_simple_bound)},
                         {"a3_bound", fmt(b.a3_bound)},
                         {"fs_h", fmt(b.fs_h)},
                         {"fs_threshold", fmt(b.fs_threshold)},
                         {"fs_bound", fmt(b.fs_bound)}});
}

std::string cmd_bounds_table(double lambda_min, double lambda_max, double step,
                             double mu, const std::string& format) {
    require_lambda(lambda_min);
    if (!(lambda_min <= lambda_max))
        throw std::invalid_argument("lambda range requires lambda-min <= lambda-max");
    if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");

    std::vector<double> grid;
    const std::size_t count =
        static_cast<std::size_t>((lambda_max - lambda_min) / step + 1e-9) + 1;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(lambda_min + step * i);

    if (format == "json") {
        json arr = json::array();
        for (const double l : grid)
            arr.push_back(bounds_json(l, mu, gft::pseudo::make_bounds({l, mu})));
        return arr.dump() + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    for (const double l : grid)
        rows.push_back(bounds_csv_row(l, gft::pseudo::make_bounds({l, mu})));
    if (format == "csv") return render_csv(bounds_csv_header, rows);
    rows.insert(rows.begin(),
                {"lambda", "a2_bound", "a2_simple", "a3_bound", "fs_h", "fs_bound"});
    return render_table(rows);
}

std::string cmd_fs(double lambda, double mu, const std::string& format) {
    require_lambda(lambda);
    const double h = gft::pseudo::fs_h(mu, lambda);
    const double t = gft::pseudo::fs_threshold(lambda);
    const double bound = gft::pseudo::fs_bound(mu, lambda);
    const double env = gft::pseudo::fs_envelope(mu, lambda);
    if (format == "json") {
        json j;
        j["lambda"] = lambda;
        j["mu"] = mu;
        j["fs_h"] = h;
        j["fs_threshold"] = t;
        j["fs_bound"] = bound;
        j["fs_envelope"] = env;
        return j.dump() + "\n";
    }
    if (format == "csv")
        return render_csv("lambda,mu,fs_h,fs_threshold,fs_bound,fs_envelope",
                          {{fmt(lambda), fmt(mu), fmt(h), fmt(t), fmt(bound), fmt(env)}});
    return render_table({{"lambda", fmt(lambda)},
                         {"mu", fmt(mu)},
                         {"fs_h", fmt(h)},
                         {"fs_threshold", fmt(t)},
                         {"fs_bound", fmt(bound)},
                         {"fs_envelope", fmt(env)}});
}

std::string cmd_curve(double r, std::size_t samples, double exclusion,
                      const std::string& format) {
    if (r < 0.0 || r > 1.0)
        throw std::invalid_argument("r must satisfy 0 <= r <= 1");
    std::vector<gft::shell::CurvePoint> pts;
    if (r == 0.0)
        pts.push_back({0.0, 1.0, 0.0});
    else
        pts = gft::shell::curve_samples(r, samples, exclusion);

    if (format == "json") {
        json arr = json::array();
        for (const auto& p : pts) arr.push_back({{"t", p.t}, {"x", p.x}, {"y", p.y}});
        return arr.dump() + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : pts) rows.push_back({fmt(p.t), fmt(p.x), fmt(p.y)});
    if (format == "table") {
        rows.insert(rows.begin(), {"t", "x", "y"});
        return render_table(rows);
    }
    return render_csv("t,x,y", rows);
}

std::string cmd_fib(std::size_t n, const std::string& format) {
    const gft::shell::FibSequence seq(n);
    if (format == "json") {
        json arr = json::array();
        for (std::size_t k = 0; k <= n; ++k)
            arr.push_back({{"n", k}, {"fib", gft::shell::uint128_str(seq.value(k))}});
        return arr.dump() + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k <= n; ++k)
        rows.push_back({std::to_string(k), gft::shell::uint128_str(seq.value(k))});
    if (format == "csv") return render_csv("n,fib", rows);
    rows.insert(rows.begin(), {"n", "fib"});
    return render_table(rows);
}

std::string cmd_ptilde(std::size_t order, const std::vector<double>& at,
                       const std::string& format) {
    if (!at.empty()) {
        const cplx z(at[0], at[1]);
        const cplx v = gft::shell::ptilde_eval(z);
        if (format == "json") {
            json j;
            j["z_re"] = z.real();
            j["z_im"] = z.imag();
            j["re"] = v.real();
            j["im"] = v.imag();
            return j.dump() + "\n";
        }
        if (format == "csv")
            return render_csv("z_re,z_im,re,im", {{fmt(z.real()), fmt(z.imag()),
                                                   fmt(v.real()), fmt(v.imag())}});
        return render_table({{"z_re", fmt(z.real())},
                             {"z_im", fmt(z.imag())},
                             {"re", fmt(v.real())},
                             {"im", fmt(v.imag())}});
    }

    const gft::series::TruncSeries p = gft::shell::ptilde_series(order);
    if (format == "json") {
        json arr = json::array();
        for (std::size_t k = 0; k <= order; ++k)
            arr.push_back({{"n", k}, {"coeff", p.coeff(k).real()}});
        return arr.dump() + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k <= order; ++k)
        rows.push_back({std::to_string(k), fmt(p.coeff(k).real())});
    if (format == "csv") return render_csv("n,coeff", rows);
    rows.insert(rows.begin(), {"n", "coeff"});
    return render_table(rows);
}

struct VerifyOutcome {
    std::string text;
    std::size_t violations = 0;
};

VerifyOutcome cmd_verify(const std::string& suite, std::uint64_t seed,
                         std::size_t samples, std::size_t order) {
    const std::vector<double> lambda_grid{1.0, 1.5, 2.0, 3.0};
    const std::vector<double> mu_grid{-2.0, 0.0, 0.5, 1.0, 2.0};

    std::vector<gft::verify::VerifyReport> reports;
    if (suite == "shell" || suite == "all")
        reports.push_back(gft::verify::verify_shell({}, seed));
    if (suite == "expansions" || suite == "all")
        reports.push_back(gft::verify::verify_expansions(samples, seed, order));
    if (suite == "bounds" || suite == "all")
        reports.push_back(gft::verify::verify_bounds(lambda_grid, mu_grid, samples, seed));
    if (reports.empty())
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (expected shell, expansions, bounds, or all)");

    VerifyOutcome out;
    if (reports.size() == 1) {
        out.text = reports[0].json() + "\n";
    } else {
        out.text = "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out.text += ",";
            out.text += reports[i].json();
        }
        out.text += "]\n";
    }
    for (const auto& r : reports) out.violations += r.violations;
    return out;
}

std::string cmd_expand(double lambda, cplx a2, cplx a3, std::size_t order,
                       const std::string& format) {
    require_lambda(lambda);
    const std::size_t n = std::max<std::size_t>(order, 3);
    const auto f = gft::series::NormalizedFn::from_initial_coeffs(a2, a3, n + 1);
    const gft::series::TruncSeries lhs = gft::pseudo::lhs_series(f, lambda, n);
    const gft::series::TruncSeries ghs = gft::pseudo::ghs_series(f, lambda, n);

    // Closed-form predictions for the constant through quadratic terms.
    const cplx one(1.0, 0.0);
    const cplx lhs1 = (2.0 * lambda - 1.0) * a2;
    const cplx lhs2 = (3.0 * lambda - 1.0) * a3 +
                      (2.0 * lambda * lambda - 4.0 * lambda + 1.0) * a2 * a2;
    const cplx ghs1 = -(2.0 * lambda - 1.0) * a2;
    const cplx ghs2 = (2.0 * lambda * lambda + 2.0 * lambda - 1.0) * a2 * a2 -
                      (3.0 * lambda - 1.0) * a3;
    const std::vector<cplx> preds_lhs{one, lhs1, lhs2};
    const std::vector<cplx> preds_ghs{one, ghs1, ghs2};

    auto rows_for = [&](const char* side, const gft::series::TruncSeries& s,
                        const std::vector<cplx>& preds,
                        std::vector<std::vector<std::string>>& rows, json* arr) {
        for (std::size_t k = 0; k <= n; ++k) {
            const cplx c = s.coeff(k);
            const bool has_pred = k < preds.size();
            if (arr) {
                json j;
                j["side"] = side;
                j["k"] = k;
                j["re"] = c.real();
                j["im"] = c.imag();
                if (has_pred) {
                    j["pred_re"] = preds[k].real();
                    j["pred_im"] = preds[k].imag();
                    j["abs_diff"] = std::abs(c - preds[k]);
                } else {
                    j["pred_re"] = nullptr;
                    j["pred_im"] = nullptr;
                    j["abs_diff"] = nullptr;
                }
                arr->push_back(j);
            } else {
                rows.push_back({side, std::to_string(k), fmt(c.real()), fmt(c.imag()),
                                has_pred ? fmt(preds[k].real()) : "",
                                has_pred ? fmt(preds[k].imag()) : "",
                                has_pred ? fmt(std::abs(c - preds[k])) : ""});
            }
        }
    };

    if (format == "json") {
        json j;
        j["lambda"] = lambda;
        j["a2_re"] = a2.real();
        j["a2_im"] = a2.imag();
        j["a3_re"] = a3.real();
        j["a3_im"] = a3.imag();
        j["order"] = n;
        json arr = json::array();
        std::vector<std::vector<std::string>> unused;
        rows_for("z", lhs, preds_lhs, unused, &arr);
        rows_for("w", ghs, preds_ghs, unused, &arr);
        j["coefficients"] = arr;
        return j.dump() + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows_for("z", lhs, preds_lhs, rows, nullptr);
    rows_for("w", ghs, preds_ghs, rows, nullptr);
    if (format == "csv")
        return render_csv("side,k,re,im,pred_re,pred_im,abs_diff", rows);
    rows.insert(rows.begin(),
                {"side", "k", "re", "im", "pred_re", "pred_im", "abs_diff"});
    return render_table(rows);
}

std::uint64_t seed_from_env(std::uint64_t cli_seed) {
    const char* env = std::getenv("GFTKIT_SEED");
    if (env == nullptr || *env == '\0') return cli_seed;
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0')
        throw std::invalid_argument("GFTKIT_SEED must be a non-negative integer, got '" +
                                    std::string(env) + "'");
    return static_cast<std::uint64_t>(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shell-function toolkit: golden-ratio series, coefficient bounds, "
                 "and verification suites"};
    app.require_subcommand(1);

    std::string format;
    std::string out_path;
    std::uint64_t seed = 0;
    const auto format_check = CLI::IsMember({"table", "json", "csv"});

    double lambda = 1.0, mu = 1.0;
    double lambda_min = 1.0, lambda_max = 2.0, step = 0.25;
    double r = 1.0, exclusion = 0.1;
    std::size_t samples = 360, n = 10;
    std::size_t ptilde_order = gft::series::default_order, expand_order = 8;
    std::size_t verify_samples = 10000, verify_order = 8;
    double a2_re = 0.0, a2_im = 0.0, a3_re = 0.0, a3_im = 0.0;
    std::vector<double> at;
    std::string suite = "all";

    // Options bound to variables shared across subcommands must not use
    // default_val: it writes the bound variable at registration time, so the
    // last subcommand registered would clobber the others' defaults. Variable
    // initializers carry the defaults instead; --format is resolved after
    // parsing because its default differs per subcommand.
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format,
                        "Output format: table, json, or csv (default: table, "
                        "except curve: csv)")
            ->check(format_check);
        sub->add_option("--out", out_path, "Write output to this file instead of stdout");
    };

    CLI::App* sc_bounds = app.add_subcommand(
        "bounds", "Coefficient and Fekete-Szego bounds for one (lambda, mu)");
    sc_bounds->add_option("--lambda", lambda, "Pseudo-starlikeness order (>= 1)")
        ->required();
    sc_bounds->add_option("--mu", mu, "Fekete-Szego weight (default 1)");
    add_common(sc_bounds);

    CLI::App* sc_table = app.add_subcommand(
        "bounds-table", "Bounds over a lambda grid, one row per lambda");
    sc_table->add_option("--lambda-min", lambda_min, "Grid start (>= 1, default 1)");
    sc_table->add_option("--lambda-max", lambda_max, "Grid end (default 2)");
    sc_table->add_option("--step", step, "Grid step (> 0, default 0.25)");
    sc_table->add_option("--mu", mu, "Fekete-Szego weight (default 1)");
    add_common(sc_table);

    CLI::App* sc_fs = app.add_subcommand(
        "fs", "Fekete-Szego data: h(mu), threshold, piecewise bound, envelope");
    sc_fs->add_option("--lambda", lambda, "Pseudo-starlikeness order (>= 1)")
        ->required();
    sc_fs->add_option("--mu", mu, "Fekete-Szego weight (default 1)");
    add_common(sc_fs);

    CLI::App* sc_curve = app.add_subcommand(
        "curve", "Samples of the shell function on the circle |z| = r");
    sc_curve->add_option("--r", r, "Radius in [0, 1] (default 1)");
    sc_curve->add_option("--samples", samples, "Number of uniform angles (default 360)");
    sc_curve->add_option(
        "--exclusion", exclusion,
        "Half-width of the skipped window around t = pi at r = 1 (default 0.1)");
    add_common(sc_curve);

    CLI::App* sc_fib = app.add_subcommand("fib", "Exact Fibonacci numbers u_0..u_n");
    sc_fib->add_option("--n", n, "Largest index (<= 180, default 10)");
    add_common(sc_fib);

    CLI::App* sc_ptilde = app.add_subcommand(
        "ptilde", "Shell-function coefficients, or evaluation at a point");
    sc_ptilde->add_option("--order", ptilde_order, "Truncation order (<= 64, default 16)");
    sc_ptilde
        ->add_option("--at", at, "Evaluate at z = re + i im instead of printing coefficients")
        ->expected(2);
    add_common(sc_ptilde);

    CLI::App* sc_verify = app.add_subcommand(
        "verify", "Run a verification suite and emit its JSON report");
    sc_verify->add_option("--suite", suite, "shell, expansions, bounds, or all (default all)");
    sc_verify->add_option("--seed", seed, "Base seed for the sampling streams (default 0)");
    sc_verify->add_option(
        "--samples", verify_samples,
        "Samples per (lambda, mu) cell; also the expansion trial count (default 10000)");
    sc_verify->add_option("--order", verify_order,
                          "Series order for expansion checks (default 8)");
    sc_verify->add_option("--out", out_path, "Write the report to this file");

    CLI::App* sc_expand = app.add_subcommand(
        "expand", "Expansion coefficients of both functionals vs. closed forms");
    sc_expand->add_option("--lambda", lambda, "Pseudo-starlikeness order (>= 1)")
        ->required();
    sc_expand->add_option("--a2", a2_re, "Second coefficient, real part (default 0)");
    sc_expand->add_option("--a2-im", a2_im, "Second coefficient, imaginary part (default 0)");
    sc_expand->add_option("--a3", a3_re, "Third coefficient, real part (default 0)");
    sc_expand->add_option("--a3-im", a3_im, "Third coefficient, imaginary part (default 0)");
    sc_expand->add_option("--order", expand_order, "Truncation order (>= 3, default 8)");
    add_common(sc_expand);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (format.empty()) format = sc_curve->parsed() ? "csv" : "table";

    try {
        if (sc_bounds->parsed()) {
            emit(cmd_bounds(lambda, mu, format), out_path);
        } else if (sc_table->parsed()) {
            emit(cmd_bounds_table(lambda_min, lambda_max, step, mu, format), out_path);
        } else if (sc_fs->parsed()) {
            emit(cmd_fs(lambda, mu, format), out_path);
        } else if (sc_curve->parsed()) {
            emit(cmd_curve(r, samples, exclusion, format), out_path);
        } else if (sc_fib->parsed()) {
            emit(cmd_fib(n, format), out_path);
        } else if (sc_ptilde->parsed()) {
            emit(cmd_ptilde(ptilde_order, at, format), out_path);
        } else if (sc_verify->parsed()) {
            const VerifyOutcome outcome =
                cmd_verify(suite, seed_from_env(seed), verify_samples, verify_order);
            emit(outcome.text, out_path);
            if (outcome.violations != 0) return 1;
        } else if (sc_expand->parsed()) {
            emit(cmd_expand(lambda, cplx(a2_re, a2_im), cplx(a3_re, a3_im),
                            expand_order, format),
                 out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
