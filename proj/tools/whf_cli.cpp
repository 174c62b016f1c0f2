#include "whf/error.hpp"
#include "whf/io.hpp"
#include "whf/reports.hpp"
#include "whf/selftest.hpp"
#include "whf/sie.hpp"
#include "whf/symbol_io.hpp"
#include "whf/toeplitz.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>

using namespace whf;

namespace {

// Defaults for every verb; each can be overridden by a flag and is echoed in reports.
struct Config {
    double p = 2.0;
    std::string domain = "full-line";
    double grid_L = 60.0;
    std::size_t grid_N = 4096;
    double grid_T = 40.0;
    std::size_t grid_M = 4096;
    double grid_gamma = 2.0;
    double tol = 5e-2;
    bool numeric = false;
};

struct Request {
    std::string verb;
    std::string symbol;
    std::vector<std::string> lambdas;
    std::string lambda_file;
    std::string input;
    std::string out;
    std::string solution_out;
    Config cfg;
};

Json config_json(const Request& r)
{
    Json j;
    j["verb"] = r.verb;
    if (!r.symbol.empty())
        j["symbol"] = r.symbol;
    j["p"] = r.cfg.p;
    j["domain"] = r.cfg.domain;
    j["grid_L"] = r.cfg.grid_L;
    j["grid_N"] = r.cfg.grid_N;
    j["grid_T"] = r.cfg.grid_T;
    j["grid_M"] = r.cfg.grid_M;
    j["grid_gamma"] = r.cfg.grid_gamma;
    j["tol"] = r.cfg.tol;
    if (!r.input.empty())
        j["input"] = r.input;
    return j;
}

void emit(const Request& r, const std::string& text)
{
    if (r.out.empty())
        std::cout << text;
    else
        write_file_atomic(r.out, text);
}

Symbol need_symbol(const Request& r)
{
    if (r.symbol.empty())
        fail(ErrorCode::ParseError, "--symbol is required for " + r.verb);
    return load_symbol(r.symbol);
}

std::vector<cplx> need_lambdas(const Request& r)
{
    std::vector<cplx> out;
    for (const std::string& s : r.lambdas)
        out.push_back(parse_complex(s));
    if (!r.lambda_file.empty()) {
        for (std::string_view line : split(read_file(r.lambda_file), '\n')) {
            line = trim(line);
            if (!line.empty() && line[0] != '#')
                out.push_back(parse_complex(line));
        }
    }
    if (out.empty())
        fail(ErrorCode::ParseError, "--lambda is required for " + r.verb);
    return out;
}

Grid halfline_grid(const Config& c)
{
    return Grid::graded(c.grid_T, c.grid_M, c.grid_gamma);
}

int run_factorize(const Request& r)
{
    const Symbol g = need_symbol(r);
    Json j;
    j["config"] = config_json(r);
    j["symbol"] = serialize_symbol(g);
    WHFactorisation f;
    if (r.cfg.numeric) {
        f = numeric_canonical_factorise(g, Grid::cayley(r.cfg.grid_N));
    } else if (const auto* rs = std::get_if<RationalSymbol>(&g)) {
        f = wh_factor_rational(*rs);
    } else {
        const PCSymbol& pc = std::get<PCSymbol>(g);
        const auto* pf = std::get_if<PowerForm>(&pc.base());
        if (!pf || !std::isinf(pf->cut) || pf->scale != cplx{1.0})
            fail(ErrorCode::InvalidArgument, "closed-form factorisation covers rational symbols and r^alpha only");
        f = factor_jump_symbol(pf->alpha, r.cfg.p);
    }
    j["factorisation"] = to_json(f);
    if (f.provenance != Provenance::jump_power) {
        std::vector<double> xs;
        for (int k = -40; k <= 40; ++k)
            xs.push_back(std::sinh(k / 8.0));
        j["verification"] = to_json(verify_factorisation(f, g, xs));
        j["inverse_recipe"] = to_json(inverse_recipe(f));
    }
    emit(r, dump(j));
    return 0;
}

int run_analyze(const Request& r)
{
    const Symbol g = need_symbol(r);
    Json j;
    j["config"] = config_json(r);
    j["report"] = to_json(fredholm_report(g, r.cfg.p));
    if (const auto* pc = std::get_if<PCSymbol>(&g)) {
        PRegularity reg = p_regular(*pc, r.cfg.p);
        j["p_regular"] = {{"regular", reg.regular},
                          {"exact_regular", reg.exact_regular},
                          {"min_modulus", reg.min_modulus},
                          {"reason", reg.reason}};
        if (!pc->closure_vanishes()) {
            j["jump_exponents"] = to_json(jump_exponents(*pc));
            j["window_test"] = window_test(*pc, r.cfg.p);
        }
    }
    DualityResult d = duality_check(g, r.cfg.p);
    j["duality"] = {{"agree", d.agree},
                    {"p_prime", d.p_prime},
                    {"at_p", std::string(to_string(d.at_p))},
                    {"reciprocal_at_p_prime", std::string(to_string(d.reciprocal_at_p_prime))}};
    emit(r, dump(j));
    return 0;
}

int run_curve(const Request& r)
{
    const Symbol g = need_symbol(r);
    emit(r, curve_csv(gp_curve(as_pc(g), r.cfg.p)));
    return 0;
}

GridFunction load_or_default(const Request& r, const Grid& grid, const std::function<cplx(double)>& dflt)
{
    if (!r.input.empty())
        return parse_grid_function(read_file(r.input));
    return GridFunction::sample(grid, dflt);
}

int run_hilbert(const Request& r)
{
    GridFunction f = load_or_default(r, Grid::uniform(r.cfg.grid_L, r.cfg.grid_N),
                                     [](double x) { return 1.0 / (1.0 + x * x); });
    emit(r, serialize_grid_function(hilbert_S(f)));
    return 0;
}

int run_solve(const Request& r)
{
    const std::vector<cplx> lambdas = need_lambdas(r);
    if (lambdas.size() != 1)
        fail(ErrorCode::ParseError, "solve takes exactly one --lambda");
    const cplx lambda = lambdas[0];
    const Domain domain = parse_domain(r.cfg.domain);
    Json j;
    j["config"] = config_json(r);
    j["lambda"] = to_json(lambda);
    GridFunction f;
    if (domain == Domain::full_line) {
        GridFunction h = load_or_default(r, Grid::uniform(r.cfg.grid_L, r.cfg.grid_N),
                                         [](double x) { return std::exp(-x * x); });
        f = resolve_fullline(lambda, h);
        double res = fullline_residual(lambda, f, h);
        j["residual"] = res;
        if (!(res <= r.cfg.tol))
            fail(ErrorCode::ResidualTooLarge, "full-line residual " + format_double(res));
    } else if (domain == Domain::half_line) {
        GridFunction h = load_or_default(r, halfline_grid(r.cfg), [](double t) { return std::exp(-t); });
        HalfLineOptions opts;
        opts.residual_tolerance = r.cfg.tol;
        HalfLineSolution s = resolve_halfline_any(lambda, h, opts);
        j["solution"] = to_json(s);
        j["residual"] = s.residual;
        f = std::move(s.f);
    } else {
        fail(ErrorCode::InvalidArgument, "no resolvent is implemented on the unit interval (use scan)");
    }
    if (!r.solution_out.empty())
        write_file_atomic(r.solution_out, serialize_grid_function(f));
    emit(r, dump(j));
    return 0;
}

int run_scan(const Request& r)
{
    const std::vector<cplx> lambdas = need_lambdas(r);
    emit(r, scan_csv(spectrum_scan(parse_domain(r.cfg.domain), lambdas)));
    return 0;
}

int run_checks(const Request& r)
{
    std::string text;
    bool ok = true;
    for (const SelfTestCheck& c : whf::run_selftest()) {
        text += (c.passed ? "PASS " : "FAIL ") + c.name;
        if (!c.detail.empty())
            text += " (" + c.detail + ")";
        text += '\n';
        ok = ok && c.passed;
    }
    emit(r, text);
    return ok ? 0 : 1;
}

int exit_code(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
        return 2;
    case ErrorCode::ResidualTooLarge:
        return 4;
    default:
        return 3;
    }
}

} // namespace

int main(int argc, char** argv)
{
    Request req;
    CLI::App app{"Wiener-Hopf factorisation, Toeplitz/Fredholm analysis and singular integral equations"};
    app.require_subcommand(1, 1);
    Config& c = req.cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--symbol", req.symbol, "symbol file or shorthand r^K, sign:LAMBDA, tanh:LAMBDA, power:ALPHA");
        sub->add_option("--p", c.p, "Lebesgue exponent, 1 < p < inf")->capture_default_str();
        sub->add_option("--lambda", req.lambdas, "spectral parameter \"re,im\" (repeatable for scan)");
        sub->add_option("--lambda-file", req.lambda_file, "one \"re,im\" per line");
        sub->add_option("--domain", c.domain, "full-line | half-line | unit-interval")->capture_default_str();
        sub->add_option("--grid-L", c.grid_L, "uniform grid half-width")->capture_default_str();
        sub->add_option("--grid-N", c.grid_N, "uniform / Cayley grid points (power of two)")->capture_default_str();
        sub->add_option("--grid-T", c.grid_T, "half-line cutoff")->capture_default_str();
        sub->add_option("--grid-M", c.grid_M, "half-line points (power of two)")->capture_default_str();
        sub->add_option("--grid-gamma", c.grid_gamma, "half-line grading exponent")->capture_default_str();
        sub->add_option("--tol", c.tol, "residual tolerance")->capture_default_str();
        sub->add_option("--input", req.input, "grid function file (hilbert, solve)");
        sub->add_option("--out", req.out, "output path (stdout when absent)");
    };

    std::vector<std::pair<CLI::App*, int (*)(const Request&)>> verbs;
    auto verb = [&](const char* name, const char* help, int (*fn)(const Request&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub);
        verbs.emplace_back(sub, fn);
        return sub;
    };
    verb("factorize", "Wiener-Hopf factorisation report (JSON)", run_factorize)
        ->add_flag("--numeric", c.numeric, "grid factorisation on a Cayley grid of --grid-N points");
    verb("analyze", "Fredholm / invertibility report (JSON)", run_analyze);
    verb("curve", "samples of the curve g_p (CSV)", run_curve);
    verb("hilbert", "apply S to a grid function", run_hilbert);
    verb("solve", "solve (S - lambda) f = h; report (JSON)", run_solve)
        ->add_option("--solution", req.solution_out, "write the solution grid function here");
    verb("scan", "classify lambda values (CSV)", run_scan);
    verb("selftest", "quick invariant checks", run_checks);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: ParseError: " << e.what() << '\n';
        return 2;
    }

    try {
        if (!(c.p > 1.0) || !std::isfinite(c.p))
            fail(ErrorCode::ParseError, "--p must lie in (1, inf)");
        for (auto& [sub, fn] : verbs) {
            if (sub->parsed()) {
                req.verb = sub->get_name();
                return fn(req);
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
