#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spfkit/best.hpp"
#include "spfkit/error.hpp"
#include "spfkit/hsum.hpp"
#include "spfkit/interp.hpp"
#include "spfkit/metrics.hpp"
#include "spfkit/suite.hpp"

using namespace spfkit;
using Json = nlohmann::ordered_json;

namespace
{

// ------------------------------------------------------------- parsing

Complex parse_complex(std::string s)
{
    auto bad = [&] { return Error(ErrorKind::precondition, "cannot parse complex number '" + s + "'"); };
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t += ch;
    if (t.empty())
        throw bad();
    auto to_double = [&](const std::string& x) {
        if (x.empty() || x == "+")
            return 1.0;
        if (x == "-")
            return -1.0;
        std::size_t used = 0;
        double v = 0.0;
        try
        {
            v = std::stod(x, &used);
        }
        catch (const std::exception&)
        {
            throw bad();
        }
        if (used != x.size())
            throw bad();
        return v;
    };
    if (t.back() != 'i' && t.back() != 'j')
    {
        if (t == "+" || t == "-")
            throw bad();
        return to_double(t);
    }
    std::string body = t.substr(0, t.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
        {
            split = k;
            break;
        }
    if (split == std::string::npos)
        return Complex(0.0, to_double(body));
    std::string re = body.substr(0, split);
    if (re == "+" || re == "-")
        throw bad();
    return Complex(to_double(re), to_double(body.substr(split)));
}

CVector parse_list(const std::string& s)
{
    CVector out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(parse_complex(item));
    return out;
}

Complex json_complex(const Json& v)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string())
        return parse_complex(v.get<std::string>());
    if (v.is_array() && v.size() == 2)
        return {v[0].get<double>(), v[1].get<double>()};
    if (v.is_object() && v.contains("re"))
        return {v["re"].get<double>(), v.value("im", 0.0)};
    throw Error(ErrorKind::precondition, "unsupported coefficient entry " + v.dump());
}

CVector read_coefficient_file(const std::string& path)
{
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::precondition, "cannot open coefficient file '" + path + "'");
    Json doc = Json::parse(in);
    const Json& arr = doc.is_object() ? doc.at("coeffs") : doc;
    require(arr.is_array(), ErrorKind::precondition, "coefficient file must hold an array or {\"coeffs\": [...]}");
    CVector out;
    for (const auto& v : arr)
        out.push_back(json_complex(v));
    return out;
}

// -------------------------------------------------------------- output

Json cj(Complex z)
{
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json cvec(const CVector& v)
{
    Json a = Json::array();
    for (Complex z : v)
        a.push_back(cj(z));
    return a;
}

Json rvec(const std::vector<double>& v)
{
    return Json(v);
}

struct Record
{
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    Json checks = Json::object();

    void check(const std::string& name, double value, double limit, bool passed)
    {
        checks[name] = Json{{"value", value}, {"limit", limit}, {"passed", passed}};
    }
    void check(const std::string& name, bool passed) { checks[name] = Json{{"passed", passed}}; }

    bool passed() const
    {
        for (const auto& [k, v] : checks.items())
            if (!v.at("passed").get<bool>())
                return false;
        return true;
    }
};

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer() || v.is_number_unsigned())
        return v.dump();
    if (v.is_number())
        return num(v.get<double>());
    if (v.is_null())
        return "";
    return v.dump();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
    {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

struct CsvRow
{
    std::string field, index, value, imag;
};

void flatten(const std::string& field, const std::string& index, const Json& v, std::vector<CsvRow>& rows)
{
    if (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im"))
        rows.push_back({field, index, scalar_text(v["re"]), scalar_text(v["im"])});
    else if (v.is_object())
    {
        for (const auto& [k, x] : v.items())
            flatten(field.empty() ? k : field + "." + k, index, x, rows);
        if (v.empty())
            rows.push_back({field, index, "", ""});
    }
    else if (v.is_array())
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            flatten(field, index.empty() ? std::to_string(i) : index + "." + std::to_string(i), v[i], rows);
        if (v.empty())
            rows.push_back({field, index, "", ""});
    }
    else
        rows.push_back({field, index, scalar_text(v), ""});
}

std::string render(const Record& r, const std::string& format)
{
    if (format == "json")
    {
        Json doc{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results},
                 {"checks", r.checks},   {"passed", r.passed()}};
        return doc.dump(2) + "\n";
    }
    std::vector<CsvRow> rows;
    flatten("", "", r.results, rows);
    flatten("checks", "", r.checks, rows);
    rows.push_back({"passed", "", r.passed() ? "true" : "false", ""});

    std::string out = "command";
    for (const auto& [k, v] : r.inputs.items())
        out += "," + csv_field(k);
    out += ",field,index,value,imag\r\n";
    std::string prefix = csv_field(r.command);
    for (const auto& [k, v] : r.inputs.items())
        prefix += "," + csv_field(scalar_text(v));
    for (const auto& row : rows)
        out += prefix + "," + csv_field(row.field) + "," + csv_field(row.index) + "," + csv_field(row.value) + "," +
               csv_field(row.imag) + "\r\n";
    return out;
}

// ------------------------------------------------------------ options

struct Params
{
    std::size_t n = 0;
    double c = 0.0;
    std::string c_text;
    double omega = 0.0;
    double delta = 0.0;
    double a = 2.0;
    double p = 1.0;
    double phi = 1.0;
    double r = 2.0;
    double lp = 4.0;
    double radius = 1.0;
    std::size_t mu = 1;
    std::string z = "0.5";
    std::string f_file, coeffs, h, nodes, values, poles, moments, kind = "diff", method = "both";
    bool literal = false;
    bool all = false;
    std::vector<int> criteria;
    std::uint64_t seed = 42;
    std::string format;
    std::string out;
};

double rel_gap(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

Complex ipow(Complex z, std::size_t k)
{
    Complex r = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        r *= z;
    return r;
}

PowerSeries monomial(std::size_t j)
{
    CVector c(j + 1, 0.0);
    c[j] = 1.0;
    return PowerSeries(c);
}

// ------------------------------------------------------------ commands

Record cmd_pade(const Params& P)
{
    Record rec{"pade"};
    CVector f = !P.f_file.empty() ? read_coefficient_file(P.f_file) : parse_list(P.coeffs);
    require(!f.empty(), ErrorKind::precondition, "pade: give coefficients with --f FILE or --coeffs LIST");
    require(P.n >= 1, ErrorKind::precondition, "pade: n must be >= 1");
    require(f.size() >= P.n, ErrorKind::precondition, "pade: need at least n Maclaurin coefficients");
    rec.inputs = {{"source", P.f_file.empty() ? "--coeffs" : P.f_file}, {"n", P.n}, {"method", P.method}};
    PowerSeries series(f);
    SimpleFraction spf = P.method == "exp" ? pade_spf_exp(series, P.n) : pade_spf(series, P.n);
    CVector mc = maclaurin_coefficients(spf, P.n);
    Json residuals = Json::array();
    double worst = 0.0;
    for (std::size_t m = 0; m < P.n; ++m)
    {
        double e = std::abs(mc[m] - f[m]);
        worst = std::max(worst, e);
        residuals.push_back(e);
    }
    rec.results["order"] = spf.order();
    rec.results["poles"] = cvec(spf.poles());
    rec.results["coefficient_residuals"] = residuals;
    rec.check("contact", worst, 1e-9, worst <= 1e-9);
    if (P.method == "both")
    {
        SimpleFraction other = pade_spf_exp(series, P.n);
        double d = other.order() == spf.order() ? pole_distance(spf.poles(), other.poles()) : INFINITY;
        rec.results["exp_route_poles"] = cvec(other.poles());
        rec.check("routes_agree", d, 1e-7, d <= 1e-7);
    }
    return rec;
}

Record cmd_interp(const Params& P)
{
    Record rec{"interp"};
    CVector nodes = parse_list(P.nodes), values = parse_list(P.values);
    require(!nodes.empty() && nodes.size() == values.size(), ErrorKind::precondition,
            "interp: --nodes and --values must be nonempty lists of equal length");
    require(P.n >= 1, ErrorKind::precondition, "interp: n must be >= 1");
    rec.inputs = {{"nodes", P.nodes}, {"values", P.values}, {"n", P.n}, {"seed", P.seed}};
    GeneralizedOptions opts;
    opts.seed = P.seed;
    GeneralizedFamily fam = generalized_interp_simple(nodes, values, P.n, opts);
    InterpolationTable table{nodes, {}};
    for (Complex b : values)
        table.values.push_back({b});
    ComplexMatrix sys = generalized_system(table, P.n);
    Json basis = Json::array();
    double residual = 0.0;
    for (const auto& v : fam.basis)
    {
        basis.push_back(cvec(v));
        residual = std::max(residual, (sys * to_eigen(v)).norm() / std::max(1.0, sys.norm()));
    }
    rec.results["verdict"] = to_string(fam.verdict);
    rec.results["basis"] = basis;
    rec.results["forced_singular"] = fam.forced_singular;
    if (fam.regular)
    {
        rec.results["regular_q"] = cvec(fam.regular->q.coeffs());
        rec.results["regular_poles"] = cvec(fam.regular->spf.poles());
    }
    rec.check("basis_residual", residual, 1e-8, residual <= 1e-8);
    return rec;
}

Record cmd_const(const Params& P)
{
    Record rec{"const"};
    Complex c = parse_complex(P.c_text);
    require(c != Complex{}, ErrorKind::precondition, "const: c must be nonzero");
    require(P.n >= 1 || !P.nodes.empty(), ErrorKind::precondition, "const: give n >= 1 or --nodes");
    bool chebyshev = P.nodes.empty();
    CVector nodes;
    if (chebyshev)
        for (double t : chebyshev_nodes(P.n))
            nodes.push_back(t);
    else
        nodes = parse_list(P.nodes);
    rec.inputs = {{"c", P.c_text}, {"n", nodes.size()}, {"nodes", chebyshev ? "chebyshev" : P.nodes}};
    GeneralizedSolution sol = interpolate_constant(c, nodes);
    Json status = Json::array();
    for (NodeStatus s : sol.node_status)
        status.push_back(to_string(s));
    rec.results["q"] = cvec(sol.q.coeffs());
    rec.results["poles"] = cvec(sol.spf.poles());
    rec.results["node_status"] = status;

    // rho - c = -c Pi / Q at fixed off-node points.
    ComplexPolynomial pi = ComplexPolynomial::from_roots(nodes);
    double ident = 0.0;
    for (Complex z : {Complex(0.31, 0.72), Complex(-0.6, -0.45), Complex(1.7, 0.2)})
    {
        Complex lhs = sol.spf(z) - c;
        Complex rhs = -c * pi(z) / sol.q.monic()(z);
        ident = std::max(ident, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    rec.check("identity", ident, 1e-8, ident <= 1e-8);

    bool real_case = c.imag() == 0.0;
    std::vector<double> rn;
    for (Complex x : nodes)
    {
        real_case = real_case && x.imag() == 0.0;
        rn.push_back(x.real());
    }
    if (real_case)
    {
        double cr = c.real();
        double err = sup_norm([&](double x) { return constant_residual(cr, rn, x); }, -1.0, 1.0).value;
        rec.results["sup_error"] = err;
        if (chebyshev && cr > 0.0 && cr < 0.5)
        {
            double nn = static_cast<double>(nodes.size());
            double bound = cr * (1.0 - cr) / ((1.0 - 2.0 * cr) * std::pow(2.0, 2.0 * nn - 1.0) * std::tgamma(nn + 1.0));
            rec.results["sup_error_bound"] = bound;
            rec.check("chebyshev_bound", err, bound, err <= bound);
        }
    }
    return rec;
}

Record cmd_remez(const Params& P)
{
    Record rec{"remez"};
    require(P.n >= 1, ErrorKind::precondition, "remez: n must be >= 1");
    require(std::isfinite(P.c) && P.c != 0.0, ErrorKind::precondition, "remez: c must be a finite nonzero real");
    rec.inputs = {{"c", P.c}, {"n", P.n}};
    RemezResult r = remez_constant(P.c, P.n);
    DeviationBounds b = constant_deviation_bounds(P.c, P.n);
    rec.results["poles"] = cvec(r.spf.poles());
    rec.results["nodes"] = rvec(r.nodes);
    rec.results["alternance_points"] = rvec(r.alternance.points);
    rec.results["alternance_residuals"] = rvec(r.alternance.residuals);
    rec.results["deviation"] = r.deviation;
    rec.results["bound_interval"] = Json{{"lower", b.lower}, {"upper", b.upper}};
    rec.results["interval_norms"] = rvec(r.interval_norms);
    rec.results["equalization"] = r.equalization;
    rec.results["iterations"] = r.iterations;
    rec.results["converged"] = r.converged;
    rec.results["in_guaranteed_regime"] = r.in_guaranteed_regime;
    rec.check("converged", r.converged);
    rec.check("alternance_count", static_cast<double>(r.alternance.count), static_cast<double>(P.n + 1),
              r.alternance.count == P.n + 1);
    rec.check("deviation_in_bounds", r.deviation >= b.lower && r.deviation <= b.upper);
    return rec;
}

Record cmd_extremal(const Params& P)
{
    Record rec{"extremal"};
    require(P.n >= 1, ErrorKind::precondition, "extremal: n must be >= 1");
    require((P.omega > 0.0) != (P.delta > 0.0), ErrorKind::precondition,
            "extremal: give exactly one of --omega (> 1) or --delta (> 0)");
    double omega = P.omega > 0.0 ? P.omega : omega_from_delta(P.delta, P.n);
    require(omega > 1.0, ErrorKind::domain, "extremal: omega must exceed 1");
    rec.inputs = {{"n", P.n}, {"omega", P.omega}, {"delta", P.delta}};
    ExtremalFraction ef = extremal_fraction(omega, P.n);
    auto weighted = [&](double x) {
        double s = std::sqrt(std::max(0.0, 1.0 - x * x));
        return s == 0.0 ? 0.0 : s * std::abs(ef.closed_form(x));
    };
    double numeric = sup_norm(weighted, -1.0, 1.0).value;
    rec.results["omega"] = omega;
    rec.results["delta"] = ef.delta;
    rec.results["poles"] = cvec(ef.poles);
    rec.results["weighted_norm_numeric"] = numeric;
    rec.results["weighted_norm_closed_form"] = ef.weighted_norm();
    rec.results["alternation_points"] = rvec(ef.alternation_points());
    double gap = rel_gap(numeric, ef.weighted_norm());
    rec.check("closed_form_norm", gap, 1e-6, gap <= 1e-6);
    if (P.delta > 0.0)
    {
        double cheb = chebyshev_weighted_norm(P.delta, P.n);
        rec.results["chebyshev_norm"] = cheb;
        double g2 = rel_gap(numeric, cheb);
        rec.check("chebyshev_norm", g2, 1e-6, g2 <= 1e-6);
    }
    return rec;
}

Json inequality_json(const std::vector<InequalityCheck>& list, Record& rec)
{
    Json arr = Json::array();
    for (const auto& c : list)
    {
        arr.push_back(Json{{"name", c.name}, {"lhs", c.lhs},           {"rhs", c.rhs},  {"holds", c.holds},
                           {"asserted", c.asserted}, {"skipped", c.skipped}, {"note", c.note}});
        if (c.asserted && !c.skipped)
            rec.check(c.name, c.holds);
    }
    return arr;
}

Record cmd_metrics(const Params& P)
{
    Record rec{"metrics"};
    CVector poles = parse_list(P.poles);
    require(!poles.empty(), ErrorKind::precondition, "metrics: --poles must be a nonempty list");
    rec.inputs = {{"poles", P.poles}, {"phi", P.phi}, {"r", P.r}, {"p", P.lp}};
    HalfPlanePoles hp(poles);
    NotchSet ns = notch_points(hp, P.phi);
    double integral = integrate_real_line([&](double x) { return std::norm(hp.rho(x)); }, hp.poles());
    double quad = l2_quadrature(hp, P.phi);
    double quad_nu = l2_quadrature_nu(hp, P.phi);
    rec.results["notch_points"] = rvec(ns.points);
    rec.results["notch_residual"] = ns.max_residual;
    rec.results["l2_squared_integral"] = integral;
    rec.results["l2_squared_quadrature"] = quad;
    rec.results["l2_squared_quadrature_nu"] = quad_nu;
    rec.check("notch_residual", ns.max_residual, 1e-10, ns.max_residual <= 1e-10);
    double g = std::max(rel_gap(quad, integral), rel_gap(quad_nu, integral));
    rec.check("quadrature_identity", g, 1e-6, g <= 1e-6);
    InequalityOptions opts;
    opts.r = P.r;
    opts.p = P.lp;
    rec.results["inequalities"] = inequality_json(inequality_suite(hp, checks::all, opts), rec);
    return rec;
}

Record cmd_derivs(const Params& P)
{
    Record rec{"derivs"};
    CVector poles = parse_list(P.poles);
    require(!poles.empty(), ErrorKind::precondition, "derivs: --poles must be a nonempty list");
    rec.inputs = {{"poles", P.poles}, {"radius", P.radius}};
    InequalityOptions opts;
    opts.circle_radius = P.radius;
    rec.results["checks"] = inequality_json(derivative_suite(SimpleFraction(poles), checks::all, opts), rec);
    return rec;
}

Record cmd_hsum(const Params& P)
{
    Record rec{"hsum"};
    require(P.n >= 1, ErrorKind::precondition, "hsum: n must be >= 1");
    Complex z = parse_complex(P.z);
    rec.inputs = {{"kind", P.kind}, {"n", P.n}, {"a", P.a}, {"mu", P.mu}, {"z", P.z}, {"literal", P.literal}};
    if (P.kind == "diff" || P.kind == "int")
    {
        bool diff = P.kind == "diff";
        CVector nodes = diff ? diff_nodes(P.n, P.literal) : int_nodes(P.n, P.literal);
        double worst = 0.0;
        for (std::size_t j = 0; j < P.n; ++j)
        {
            PowerSeries h = monomial(j);
            HSum s{nodes, h};
            Complex want = diff ? static_cast<double>(j) * ipow(z, j) : ipow(z, j + 1) / static_cast<double>(j + 1);
            Complex got = diff ? -h.eval(z) + s(z) : z * s(z);
            worst = std::max(worst, std::abs(want - got));
        }
        rec.results["freqs"] = cvec(nodes);
        rec.results["power_sums"] = cvec(power_sums(nodes, P.n));
        rec.check("exactness", worst, 1e-10, worst <= 1e-10);
    }
    else if (P.kind == "extrap")
    {
        require(P.a > 1.0, ErrorKind::precondition, "hsum extrap: a must exceed 1");
        CVector freqs = extrap_freqs(P.a, P.n);
        double mx = 0.0;
        for (Complex l : freqs)
            mx = std::max(mx, std::abs(l));
        double bound = extrap_freq_bound(P.a, P.n);
        rec.results["freqs"] = cvec(freqs);
        rec.results["max_abs_freq"] = mx;
        rec.results["freq_bound"] = bound;
        rec.check("freq_bound", mx, bound, mx <= bound * (1.0 + 1e-12));
        double worst = 0.0;
        Json rem = Json::array();
        for (std::size_t m = 0; m < 2 * P.n + 2; ++m)
        {
            PowerSeries h = monomial(m);
            Complex actual = h.eval(z) - extrapolate(h, P.a, P.n, P.mu, z);
            Complex expected = extrapolation_remainder_factor(P.a, P.n, P.mu, m) * ipow(z, m);
            rem.push_back(cj(actual));
            worst = std::max(worst, std::abs(actual - expected));
        }
        rec.results["monomial_remainders"] = rem;
        rec.check("remainder_identity", worst, 1e-9, worst <= 1e-9);
    }
    else if (P.kind == "pade")
    {
        CVector f = parse_list(P.coeffs), h = parse_list(P.h);
        require(f.size() >= P.n && h.size() >= P.n, ErrorKind::precondition,
                "hsum pade: --coeffs (f) and --base (h) need at least n coefficients");
        HSum s = hsum_pade(PowerSeries(f), PowerSeries(h), P.n);
        CVector coeffs = s.coefficients(P.n);
        double worst = 0.0;
        for (std::size_t m = 0; m < P.n; ++m)
            worst = std::max(worst, std::abs(coeffs[m] - f[m]));
        rec.results["freqs"] = cvec(s.freqs);
        rec.check("contact", worst, 1e-9, worst <= 1e-9);
    }
    else
        throw Error(ErrorKind::precondition, "hsum: --kind must be diff, int, extrap or pade");
    return rec;
}

Json prony_json(const PronySolution& s)
{
    return Json{{"generating", cvec(s.generating.coeffs())},
                {"amps", cvec(s.amps)},
                {"freqs", cvec(s.freqs)},
                {"regular", s.regular},
                {"hankel_rcond", s.hankel_rcond},
                {"separation", s.separation},
                {"moment_residual", s.moment_residual},
                {"diagnostics", s.diagnostics}};
}

Record cmd_prony(const Params& P)
{
    Record rec{"prony"};
    CVector s = parse_list(P.moments);
    require(!s.empty() && s.size() % 2 == 0, ErrorKind::precondition,
            "prony: --moments must list 2n values s_0..s_{2n-1}");
    rec.inputs = {{"moments", P.moments}};
    PronySolution sol = prony_solve(s);
    rec.results = prony_json(sol);
    rec.check("regular", sol.regular);
    if (sol.regular)
        rec.check("moment_residual", sol.moment_residual, 1e-8, sol.moment_residual <= 1e-8);
    return rec;
}

Record cmd_regdiff(const Params& P)
{
    Record rec{"regdiff"};
    require(P.n >= 3, ErrorKind::precondition, "regdiff: n must be >= 3");
    Complex z = parse_complex(P.z);
    rec.inputs = {{"n", P.n}, {"p", P.p}, {"z", P.z}};
    RegDiffResult r = reg_diff(P.n, P.p);
    rec.results["p_used"] = r.p_used;
    rec.results["q"] = r.q;
    rec.results["perturbations"] = r.perturbations;
    rec.results["prony"] = prony_json(r.prony);
    rec.results["closed_form"] = cvec(r.closed_form.coeffs());
    rec.results["closed_form_gap"] = r.closed_form_gap;
    double worst = 0.0;
    for (std::size_t j = 0; j < 2 * P.n; ++j)
        worst = std::max(worst, std::abs(reg_diff_apply(r, monomial(j), z) - static_cast<double>(j) * ipow(z, j)));
    rec.check("closed_form", r.closed_form_gap, 1e-8, r.closed_form_gap <= 1e-8);
    rec.check("exactness", worst, 1e-8, worst <= 1e-8);
    return rec;
}

Record cmd_regextrap(const Params& P)
{
    Record rec{"regextrap"};
    require(P.n >= 1, ErrorKind::precondition, "regextrap: n must be >= 1");
    require(P.a > 0.0, ErrorKind::precondition, "regextrap: a must be positive");
    require(P.p > 0.0, ErrorKind::precondition, "regextrap: p must be positive");
    Complex z = parse_complex(P.z);
    rec.inputs = {{"a", P.a}, {"n", P.n}, {"p", P.p}, {"z", P.z}, {"base", P.h}};
    RegExtrapResult r = reg_extrap(P.a, P.n, P.p);
    rec.results["prony"] = prony_json(r.prony);
    rec.results["closed_form"] = cvec(r.closed_form.coeffs());
    rec.results["closed_form_gap"] = r.closed_form_gap;
    rec.results["freq_bound"] = r.freq_bound;
    rec.results["max_freq"] = r.max_freq;
    rec.results["distinct"] = r.distinct;
    rec.check("regular", r.prony.regular);
    rec.check("freq_bound", r.max_freq, r.freq_bound, r.bound_holds);
    rec.check("closed_form", r.closed_form_gap, 1e-8, r.closed_form_gap <= 1e-8);
    double worst = 0.0;
    for (std::size_t j = 0; j < 2 * P.n; ++j)
        worst = std::max(worst, std::abs(reg_extrap_apply(r, monomial(j), z) - ipow(P.a * z, j)));
    rec.check("exactness", worst, 1e-8, worst <= 1e-8);
    if (!P.h.empty())
    {
        PowerSeries h(parse_list(P.h));
        double actual = std::abs(h.eval(P.a * z) - reg_extrap_apply(r, h, z));
        double bound = reg_extrap_remainder_bound(h, P.a, P.n, z);
        rec.results["remainder"] = actual;
        rec.results["remainder_bound"] = bound;
        rec.check("remainder_bound", actual, bound, actual <= bound * (1.0 + 1e-9) + 1e-12);
    }
    return rec;
}

Record cmd_suite(const Params& P)
{
    Record rec{"suite"};
    std::vector<int> ids = P.criteria;
    if (P.all || ids.empty())
    {
        ids.clear();
        for (int i = 1; i <= acceptance_count; ++i)
            ids.push_back(i);
    }
    rec.inputs = {{"seed", P.seed}};
    Json arr = Json::array();
    std::size_t passed = 0;
    for (int id : ids)
    {
        AcceptanceResult r = run_acceptance(id, P.seed);
        arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        rec.check("criterion_" + std::to_string(id), r.passed);
        passed += r.passed ? 1 : 0;
    }
    rec.results["criteria"] = arr;
    rec.results["passed_count"] = passed;
    rec.results["total"] = ids.size();
    return rec;
}

// -------------------------------------------------------------- config

/// Expands `--config file.json` into command-line tokens placed before the
/// explicit arguments, so explicit flags win.
std::vector<std::string> expand_config(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i)
    {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[++i];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
        else
            rest.push_back(args[i]);
    }
    if (path.empty())
        return rest;
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::precondition, "cannot open config '" + path + "'");
    Json cfg = Json::parse(in);
    require(cfg.is_object(), ErrorKind::precondition, "config must be a JSON object");

    std::vector<std::string> out;
    std::string command = cfg.value("command", std::string());
    bool has_command = !rest.empty() && rest[0].rfind("-", 0) != 0;
    if (has_command)
    {
        command = rest[0];
        rest.erase(rest.begin());
    }
    require(!command.empty(), ErrorKind::precondition, "config: no command given");
    out.push_back(command);
    for (const auto& [k, v] : cfg.items())
    {
        if (k == "command")
            continue;
        if (v.is_boolean())
        {
            if (v.get<bool>())
                out.push_back("--" + k);
            continue;
        }
        if (v.is_array())
        {
            std::string joined;
            for (std::size_t i = 0; i < v.size(); ++i)
                joined += (i ? "," : "") + scalar_text(v[i]);
            out.push_back("--" + k);
            out.push_back(joined);
            continue;
        }
        out.push_back("--" + k);
        out.push_back(scalar_text(v));
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"spfkit: simple partial fraction constructions and checks"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    Params P;
    auto fmt_check = CLI::IsMember({"csv", "json"});

    auto sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->add_option("--format", P.format, "Output format (csv or json)")->check(fmt_check);
        s->add_option("--out", P.out, "Output path (default stdout)");
        s->add_option("--seed", P.seed, "Seed for randomized steps");
        return s;
    };

    CLI::App* pade = sub("pade", "Pade SPF of a Maclaurin series");
    pade->add_option("--f", P.f_file, "JSON file with coefficients f_0, f_1, ...");
    pade->add_option("--coeffs", P.coeffs, "Comma-separated coefficients");
    pade->add_option("--n", P.n, "Order")->required();
    pade->add_option("--method", P.method, "newton, exp or both")->check(CLI::IsMember({"newton", "exp", "both"}));

    CLI::App* interp = sub("interp", "Generalized interpolation with simple nodes");
    interp->add_option("--nodes", P.nodes, "Comma-separated nodes")->required();
    interp->add_option("--values", P.values, "Comma-separated values")->required();
    interp->add_option("--n", P.n, "Maximal order")->required();

    CLI::App* cst = sub("const", "Interpolation of a constant");
    cst->add_option("--c", P.c_text, "Constant (complex allowed)")->required();
    cst->add_option("--n", P.n, "Order (Chebyshev nodes when --nodes is absent)");
    cst->add_option("--nodes", P.nodes, "Comma-separated nodes");

    CLI::App* remez = sub("remez", "Best approximation of a constant on [-1,1]");
    remez->add_option("--c", P.c, "Real constant")->required();
    remez->add_option("--n", P.n, "Order")->required();

    CLI::App* extremal = sub("extremal", "Extremal fraction with weighted norm");
    extremal->add_option("--n", P.n, "Order")->required();
    extremal->add_option("--omega", P.omega, "omega > 1");
    extremal->add_option("--delta", P.delta, "Distance of the real pole from the segment");

    CLI::App* metrics = sub("metrics", "Notch points, quadrature and norm inequalities");
    metrics->add_option("--poles", P.poles, "Comma-separated poles in the upper half-plane")->required();
    metrics->add_option("--phi", P.phi, "Angle in (0, 2 pi)");
    metrics->add_option("--r", P.r, "Exponent r > 1");
    metrics->add_option("--p", P.lp, "Exponent p > r");

    CLI::App* derivs = sub("derivs", "Derivative bounds");
    derivs->add_option("--poles", P.poles, "Comma-separated poles")->required();
    derivs->add_option("--radius", P.radius, "Circle radius");

    CLI::App* hsum = sub("hsum", "h-sum node systems");
    hsum->add_option("--kind", P.kind, "diff, int, extrap or pade")
        ->check(CLI::IsMember({"diff", "int", "extrap", "pade"}));
    hsum->add_option("--n", P.n, "Number of nodes")->required();
    hsum->add_option("--a", P.a, "Extrapolation factor a > 1");
    hsum->add_option("--mu", P.mu, "Extrapolation depth");
    hsum->add_option("--z", P.z, "Evaluation point");
    hsum->add_option("--coeffs", P.coeffs, "Coefficients of f (pade)");
    hsum->add_option("--base", P.h, "Coefficients of the base series h (pade)");
    hsum->add_flag("--literal", P.literal, "Use the v-recurrence for diff/int nodes");

    CLI::App* prony = sub("prony", "Discrete moment problem");
    prony->add_option("--moments", P.moments, "Comma-separated s_0..s_{2n-1}")->required();

    CLI::App* regdiff = sub("regdiff", "Regularized differentiation");
    regdiff->add_option("--n", P.n, "n >= 3")->required();
    regdiff->add_option("--p", P.p, "Regularization seed");
    regdiff->add_option("--z", P.z, "Evaluation point for the exactness check");

    CLI::App* regextrap = sub("regextrap", "Regularized extrapolation");
    regextrap->add_option("--a", P.a, "a > 0")->required();
    regextrap->add_option("--n", P.n, "n >= 1")->required();
    regextrap->add_option("--p", P.p, "p > 0");
    regextrap->add_option("--z", P.z, "Evaluation point");
    regextrap->add_option("--base", P.h, "Coefficients of the base series h for the remainder bound");

    CLI::App* suite = sub("suite", "Acceptance criteria");
    suite->add_flag("--all", P.all, "Run every criterion");
    suite->add_option("--criterion", P.criteria, "Criterion id (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->check(CLI::Range(1, acceptance_count));

    std::vector<std::string> args;
    try
    {
        args = expand_config(argc, argv);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::reverse(args.begin(), args.end());
    try
    {
        app.parse(args);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e);
    }

    const std::string name = app.get_subcommands().front()->get_name();
    Record rec;
    try
    {
        if (name == "pade")
            rec = cmd_pade(P);
        else if (name == "interp")
            rec = cmd_interp(P);
        else if (name == "const")
            rec = cmd_const(P);
        else if (name == "remez")
            rec = cmd_remez(P);
        else if (name == "extremal")
            rec = cmd_extremal(P);
        else if (name == "metrics")
            rec = cmd_metrics(P);
        else if (name == "derivs")
            rec = cmd_derivs(P);
        else if (name == "hsum")
            rec = cmd_hsum(P);
        else if (name == "prony")
            rec = cmd_prony(P);
        else if (name == "regdiff")
            rec = cmd_regdiff(P);
        else if (name == "regextrap")
            rec = cmd_regextrap(P);
        else
            rec = cmd_suite(P);
    }
    catch (const Error& e)
    {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string format = P.format.empty() ? (name == "pade" ? "csv" : "json") : P.format;
    std::string text = render(rec, format);
    if (P.out.empty())
        std::cout << text;
    else
    {
        std::ofstream out(P.out, std::ios::binary);
        if (!out)
        {
            std::cerr << "error: cannot write '" << P.out << "'\n";
            return 2;
        }
        out << text;
    }
    return rec.passed() ? 0 : 1;
}
