#ifndef QEXPAND_APP_HPP
#define QEXPAND_APP_HPP

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "exact_coeffs.hpp"
#include "float_coeffs.hpp"
#include "parallel.hpp"
#include "saddle.hpp"
#include "special.hpp"

namespace qexpand::app
{

using json = nlohmann::ordered_json;

enum ExitCode { exit_ok = 0, exit_convergence = 2, exit_parameters = 3, exit_branch = 4 };

struct Approximation {
    long r = 0;
    std::string value;
    std::string abs_error; // empty when no reference value is available
    std::string rel_error;
    bool operator==(const Approximation &) const = default;
};

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> request;
    std::optional<std::string> exact;               // "p/q"
    std::optional<std::vector<std::string>> coords;  // cyclotomic coordinates in the power basis
    std::optional<std::string> decimal;
    std::string source;                              // computed / float-verified / published reference
    std::optional<double> verified_digits;
    std::vector<Approximation> approximations;
    std::vector<std::pair<std::string, std::string>> fields;
    bool operator==(const OutputRecord &) const = default;
};

inline json to_json(const OutputRecord &r)
{
    json j;
    j["command"] = r.command;
    json req = json::object();
    for (auto &[k, v] : r.request) req[k] = v;
    j["request"] = req;
    if (r.exact) j["exact"] = *r.exact;
    if (r.coords) j["coords"] = *r.coords;
    if (r.decimal) j["decimal"] = *r.decimal;
    if (!r.source.empty()) j["source"] = r.source;
    if (r.verified_digits) j["verified_digits"] = *r.verified_digits;
    if (!r.approximations.empty()) {
        json a = json::array();
        for (auto &x : r.approximations) {
            json e{{"r", x.r}, {"value", x.value}};
            if (!x.abs_error.empty()) e["abs_error"] = x.abs_error;
            if (!x.rel_error.empty()) e["rel_error"] = x.rel_error;
            a.push_back(e);
        }
        j["approximations"] = a;
    }
    if (!r.fields.empty()) {
        json f = json::object();
        for (auto &[k, v] : r.fields) f[k] = v;
        j["fields"] = f;
    }
    return j;
}

inline Rational parse_rational(const std::string &s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw parameter_error("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw parameter_error("zero denominator: '" + s + "'");
    q.canonicalize();
    if (q.get_str() != s) throw parameter_error("rational not in lowest terms: '" + s + "'");
    return q;
}

// Checks the exact strings; throws parameter_error on malformed data.
inline void validate_record(const OutputRecord &r)
{
    if (r.exact) parse_rational(*r.exact);
    if (r.coords)
        for (auto &c : *r.coords) parse_rational(c);
}

inline OutputRecord record_from_json(const json &j)
{
    OutputRecord r;
    r.command = j.at("command").get<std::string>();
    for (auto &[k, v] : j.at("request").items()) r.request.emplace_back(k, v.get<std::string>());
    if (j.contains("exact")) r.exact = j["exact"].get<std::string>();
    if (j.contains("coords")) r.coords = j["coords"].get<std::vector<std::string>>();
    if (j.contains("decimal")) r.decimal = j["decimal"].get<std::string>();
    if (j.contains("source")) r.source = j["source"].get<std::string>();
    if (j.contains("verified_digits")) r.verified_digits = j["verified_digits"].get<double>();
    if (j.contains("approximations"))
        for (auto &e : j["approximations"]) {
            Approximation a;
            a.r = e.at("r").get<long>();
            a.value = e.at("value").get<std::string>();
            if (e.contains("abs_error")) a.abs_error = e["abs_error"].get<std::string>();
            if (e.contains("rel_error")) a.rel_error = e["rel_error"].get<std::string>();
            r.approximations.push_back(a);
        }
    if (j.contains("fields"))
        for (auto &[k, v] : j["fields"].items()) r.fields.emplace_back(k, v.get<std::string>());
    validate_record(r);
    return r;
}

inline std::string render_text(const OutputRecord &r)
{
    std::ostringstream os;
    os << r.command;
    for (auto &[k, v] : r.request) os << " " << k << "=" << v;
    os << "\n";
    for (auto &[k, v] : r.fields) os << "  " << k << ": " << v << "\n";
    if (r.exact) os << "  exact: " << *r.exact << "\n";
    if (r.coords) {
        os << "  exact:";
        for (auto &c : *r.coords) os << " " << c;
        os << "  (coordinates in 1, xi, xi^2, ...)\n";
    }
    if (r.decimal) os << "  value: " << *r.decimal << "\n";
    if (!r.source.empty()) os << "  source: " << r.source << "\n";
    if (r.verified_digits) os << "  verified digits: " << std::floor(*r.verified_digits) << "\n";
    for (auto &a : r.approximations) {
        os << "  r=" << a.r << ": " << a.value;
        if (!a.rel_error.empty()) os << "   (abs err " << a.abs_error << ", rel err " << a.rel_error << ")";
        os << "\n";
    }
    return os.str();
}

inline std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

inline std::string render_csv(const OutputRecord &r)
{
    std::ostringstream os;
    os << "field,value\n";
    os << "command," << csv_escape(r.command) << "\n";
    for (auto &[k, v] : r.request) os << csv_escape(k) << "," << csv_escape(v) << "\n";
    for (auto &[k, v] : r.fields) os << csv_escape(k) << "," << csv_escape(v) << "\n";
    if (r.exact) os << "exact," << csv_escape(*r.exact) << "\n";
    if (r.coords)
        for (size_t i = 0; i < r.coords->size(); ++i) os << "coord" << i << "," << csv_escape((*r.coords)[i]) << "\n";
    if (r.decimal) os << "value," << csv_escape(*r.decimal) << "\n";
    if (!r.source.empty()) os << "source," << csv_escape(r.source) << "\n";
    if (r.verified_digits) os << "verified_digits," << std::floor(*r.verified_digits) << "\n";
    for (auto &a : r.approximations) {
        os << "r" << a.r << "," << csv_escape(a.value) << "\n";
        if (!a.rel_error.empty()) os << "r" << a.r << "_rel_error," << a.rel_error << "\n";
    }
    return os.str();
}

using Progress = std::function<void(const std::string &)>;

struct Options {
    long prec = 60;
    bool exact_large = false;
    Progress progress;
    int print_digits = 20;
};

// Exact-engine budget: beyond this many series terms the float path is required.
inline constexpr long exact_term_limit = 600;

inline std::string sci(const BigComplex &z, int d)
{
    if (z.im.is_zero()) return to_sci(z.re, d);
    return to_sci(z, d);
}

namespace detail
{

inline std::function<void(long, long)> step_progress(const Options &o, const std::string &what)
{
    if (!o.progress) return {};
    return [p = o.progress, what](long m, long M) { p(what + " " + std::to_string(m) + "/" + std::to_string(M)); };
}

inline void fill_errors(Approximation &a, const BigComplex &approx, const BigComplex &ref)
{
    Real e = abs(approx - ref);
    a.abs_error = to_sci(e, 6);
    Real s = abs(ref);
    a.rel_error = s.is_zero() ? std::string("inf") : to_sci(e / s, 6);
}

// Run f at P and at P + 20 digits; the value of the second pass with the agreement count.
inline std::pair<BigComplex, double> verified(const std::function<BigComplex()> &f, long P)
{
    BigComplex lo, hi;
    {
        precision_scope s(P);
        lo = f();
    }
    {
        precision_scope s(P + 20);
        hi = f();
    }
    return {hi, std::min(agreement_digits(lo, hi), static_cast<double>(P))};
}

} // namespace detail

inline OutputRecord cmd_const(const Options &o)
{
    OutputRecord r;
    r.command = "const";
    r.request = {{"prec", std::to_string(o.prec)}};
    SaddleConstants a = find_w0(o.prec), b = find_w0(o.prec + 20);
    precision_scope s(o.prec + 20);
    int d = static_cast<int>(std::min<long>(o.prec, 40));
    r.fields = {{"w0", to_sci(b.w0, d)},
                {"z0", to_sci(b.z0, d)},
                {"U", to_sci(b.U, d)},
                {"V", to_sci(b.V, d)},
                {"residual", to_sci(a.residual, 3)},
                {"newton_iterations", std::to_string(a.iterations)}};
    r.verified_digits = std::min(agreement_digits(a.w0, b.w0), static_cast<double>(o.prec));
    r.source = "computed";
    return r;
}

inline OutputRecord cmd_exact_laurent(long k, long h, long m, long N, const Options &o)
{
    validate_root(k, h);
    if (N < 1) throw parameter_error("N must be >= 1");
    OutputRecord r;
    r.command = "exact";
    r.request = {{"kind", "laurent"}, {"k", std::to_string(k)}, {"h", std::to_string(h)},
                 {"m", std::to_string(m)}, {"N", std::to_string(N)}};
    if (N / k + m > exact_term_limit) {
        if (!o.exact_large)
            throw parameter_error("N too large for the exact engine (more than " + std::to_string(exact_term_limit) +
                                  " series terms); pass --exact-large for the verified float path");
        auto pg = detail::step_progress(o, "exp series");
        VerifiedValue v = precision_doubled([&] { return a_float(m, k, h, N, pg); }, 20, std::max(o.prec, 100L));
        precision_scope s(v.digits);
        r.decimal = sci(v.value, o.print_digits);
        r.verified_digits = v.agreement;
        r.source = "float-verified (precision doubled to " + std::to_string(v.digits) + " digits)";
        return r;
    }
    CyclotomicElement a = a_exact(m, k, h, N);
    if (a.is_rational()) r.exact = a.rational_value().get_str();
    else {
        std::vector<std::string> c;
        for (auto &x : a.coords()) c.push_back(x.get_str());
        r.coords = c;
    }
    precision_scope s(o.prec);
    r.decimal = sci(a.embed(1), o.print_digits);
    r.source = "computed";
    return r;
}

inline OutputRecord cmd_exact_wave(long k, long N, long n, const Options &o)
{
    if (k < 1 || N < 1) throw parameter_error("k and N must be >= 1");
    OutputRecord r;
    r.command = "exact";
    r.request = {{"kind", "wave"}, {"k", std::to_string(k)}, {"N", std::to_string(N)}, {"n", std::to_string(n)}};
    if (N / k > exact_term_limit) {
        if (!o.exact_large)
            throw parameter_error("N too large for the exact engine; pass --exact-large for the verified float path");
        auto pg = detail::step_progress(o, "exp series");
        VerifiedValue v = precision_doubled([&] { return BigComplex(wave_float(k, N, n, pg)); }, 20, std::max(o.prec, 100L));
        precision_scope s(v.digits);
        r.decimal = sci(v.value, o.print_digits);
        r.verified_digits = v.agreement;
        r.source = "float-verified (precision doubled to " + std::to_string(v.digits) + " digits)";
        return r;
    }
    Rational w = wave_exact(k, N, n);
    r.exact = w.get_str();
    precision_scope s(o.prec);
    r.decimal = to_sci(Real(w), o.print_digits);
    r.source = "computed";
    return r;
}

// Exact (or verified float) reference for comparisons; nullopt when out of budget without --exact-large.
inline std::optional<BigComplex> reference_laurent(long k, long h, long m, long N, const Options &o)
{
    if (N / k + m <= exact_term_limit) {
        precision_scope s(o.prec + 20);
        return a_exact(m, k, h, N).embed(1);
    }
    if (!o.exact_large) return std::nullopt;
    auto pg = detail::step_progress(o, "exp series");
    return precision_doubled([&] { return a_float(m, k, h, N, pg); }, 20, std::max(o.prec, 100L)).value;
}

inline std::optional<BigComplex> reference_wave(long k, long N, long n, const Options &o)
{
    if (N / k <= exact_term_limit) {
        precision_scope s(o.prec + 20);
        return BigComplex(Real(wave_exact(k, N, n)));
    }
    if (!o.exact_large) return std::nullopt;
    auto pg = detail::step_progress(o, "exp series");
    return precision_doubled([&] { return BigComplex(wave_float(k, N, n, pg)); }, 20, std::max(o.prec, 100L)).value;
}

inline OutputRecord cmd_asym_laurent(long k, long h, long m, long N, const std::vector<long> &rs, bool compare,
                                     const Options &o)
{
    validate_root(k, h);
    OutputRecord r;
    r.command = "asym";
    r.request = {{"kind", "laurent"}, {"k", std::to_string(k)}, {"h", std::to_string(h)},
                 {"m", std::to_string(m)}, {"N", std::to_string(N)}};
    long rmax = *std::max_element(rs.begin(), rs.end());
    SaddleContext lo = make_context(k, o.prec, series_order_for(rmax));
    SaddleContext hi = make_context(k, o.prec + 20, series_order_for(rmax));
    std::optional<BigComplex> ref = compare ? reference_laurent(k, h, m, N, o) : std::nullopt;
    if (compare && !ref) r.fields.emplace_back("comparison", "skipped: exact value needs --exact-large");
    double vd = 1e9;
    for (long rr : rs) {
        BigComplex a = eval_asym_A(lo, h, m, N, rr), b = eval_asym_A(hi, h, m, N, rr);
        precision_scope s(o.prec + 20);
        vd = std::min(vd, agreement_digits(a, b));
        Approximation ap{rr, sci(b, o.print_digits), "", ""};
        if (ref) detail::fill_errors(ap, b, *ref);
        r.approximations.push_back(ap);
    }
    if (ref) {
        precision_scope s(o.prec + 20);
        r.decimal = sci(*ref, o.print_digits);
        r.source = N / k + m <= exact_term_limit ? "exact engine" : "float-verified";
    }
    r.verified_digits = std::min(vd, static_cast<double>(o.prec));
    return r;
}

inline OutputRecord cmd_asym_wave(long k, long N, long n, const std::vector<long> &rs, bool compare, const Options &o)
{
    OutputRecord r;
    r.command = "asym";
    r.request = {{"kind", "wave"}, {"k", std::to_string(k)}, {"N", std::to_string(N)}, {"n", std::to_string(n)}};
    long rmax = *std::max_element(rs.begin(), rs.end());
    SaddleContext lo = make_context(k, o.prec, series_order_for(rmax));
    SaddleContext hi = make_context(k, o.prec + 20, series_order_for(rmax));
    std::optional<BigComplex> ref = compare ? reference_wave(k, N, n, o) : std::nullopt;
    if (compare && !ref) r.fields.emplace_back("comparison", "skipped: exact value needs --exact-large");
    double vd = 1e9;
    for (long rr : rs) {
        BigComplex a(eval_asym_wave(lo, N, n, rr)), b(eval_asym_wave(hi, N, n, rr));
        precision_scope s(o.prec + 20);
        vd = std::min(vd, agreement_digits(a, b));
        Approximation ap{rr, sci(b, o.print_digits), "", ""};
        if (ref) detail::fill_errors(ap, b, *ref);
        r.approximations.push_back(ap);
    }
    if (ref) {
        precision_scope s(o.prec + 20);
        r.decimal = sci(*ref, o.print_digits);
        r.source = N / k <= exact_term_limit ? "exact engine" : "float-verified";
    }
    r.verified_digits = std::min(vd, static_cast<double>(o.prec));
    return r;
}

struct TableSpec {
    std::string id;
    bool wave = false;
    long k = 1, h = 0, m = 0, N = 1, n = 0;
    std::string label;
    std::string published; // the published exact line
};

inline const std::vector<TableSpec> &table_specs()
{
    static const std::vector<TableSpec> t{
        {"T1", false, 1, 0, -1, 2500, 0, "A_{-1}(1,2500)", "3.83861799348646318e67"},
        {"T2", false, 3, 1, -2, 2500, 0, "A_{-2}(e^{2 pi i/3},2500)", "-1.729346669988476e14 + 7.893754594541664e14i"},
        {"T3", true, 3, 0, 0, 4001, 4001, "W_3(4001,4001)", "2.2581936758249785e32"},
        {"T4", false, 1, 0, -4, 2500, 0, "A_{-4}(1,2500)", "1.97741548293140288e60"},
        {"T5", false, 4, 1, 1, 2501, 0, "A_1(i,2501)", "6.651195010459496e17 - 2.3158366731930319e18i"},
        {"T6", true, 1, 0, 0, 3500, 5000, "W_1(3500,5000)", "-3.6775621984857302e96"},
        {"T7", true, 2, 0, 0, 4001, 8002, "W_2(4001,8002)", "1.2424007618319874e53"},
        {"T8", true, 4, 0, 0, 4000, 3000, "W_4(4000,3000)", "-1.1889188816869245e23"},
    };
    return t;
}

inline const TableSpec &table_spec(const std::string &id)
{
    for (auto &t : table_specs())
        if (t.id == id) return t;
    throw parameter_error("unknown table id '" + id + "' (expected T1..T8)");
}

inline const std::vector<long> &table_rs()
{
    static const std::vector<long> rs{1, 3, 5, 7};
    return rs;
}

inline BigComplex table_approximation(const TableSpec &t, const SaddleContext &ctx, long r)
{
    return t.wave ? BigComplex(eval_asym_wave(ctx, t.N, t.n, r)) : eval_asym_A(ctx, t.h, t.m, t.N, r);
}

// Exact last line through the precision-doubled float path.
inline VerifiedValue table_exact_value(const TableSpec &t, const Options &o, long want = 20)
{
    auto pg = detail::step_progress(o, t.id + " exp series");
    if (t.wave) return precision_doubled([&] { return BigComplex(wave_float(t.k, t.N, t.n, pg)); }, want, std::max(o.prec, 100L));
    return precision_doubled([&] { return a_float(t.m, t.k, t.h, t.N, pg); }, want, std::max(o.prec, 100L));
}

inline OutputRecord cmd_table(const std::string &id, const Options &o)
{
    const TableSpec &t = table_spec(id);
    OutputRecord r;
    r.command = "table";
    r.request = {{"id", t.id}, {"quantity", t.label}};
    SaddleContext lo = make_context(t.k, o.prec, series_order_for(7));
    SaddleContext hi = make_context(t.k, o.prec + 20, series_order_for(7));
    std::optional<BigComplex> ref;
    if (o.exact_large) {
        VerifiedValue v = table_exact_value(t, o);
        precision_scope s(v.digits);
        ref = v.value;
        r.decimal = sci(v.value, o.print_digits);
        r.source = "computed (float path, precision doubled to " + std::to_string(v.digits) + " digits)";
    } else {
        r.decimal = t.published;
        r.source = "published reference";
    }
    double vd = 1e9;
    for (long rr : table_rs()) {
        BigComplex a = table_approximation(t, lo, rr), b = table_approximation(t, hi, rr);
        precision_scope s(o.prec + 20);
        vd = std::min(vd, agreement_digits(a, b));
        Approximation ap{rr, sci(b, o.print_digits), "", ""};
        if (ref) detail::fill_errors(ap, b, *ref);
        r.approximations.push_back(ap);
    }
    r.verified_digits = std::min(vd, static_cast<double>(o.prec));
    return r;
}

inline std::string render_table_csv(const OutputRecord &r)
{
    std::ostringstream os;
    os << "row,value,source\n";
    for (auto &a : r.approximations) os << a.r << "," << csv_escape(a.value) << ",asymptotic\n";
    if (r.decimal) os << "exact," << csv_escape(*r.decimal) << "," << csv_escape(r.source) << "\n";
    return os.str();
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string str() const
    {
        std::ostringstream os;
        for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_escape(header[i]);
        os << "\n";
        for (auto &row : rows) {
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
            os << "\n";
        }
        return os.str();
    }
};

struct FigureRange {
    long lo = 0, hi = 0, step = 1;
};

inline FigureRange default_range(const std::string &id)
{
    if (id == "cfig") return {7, 200, 1}; // C_014(N) = 0 below N = 4; the plotted data starts at 7
    if (id == "qfig") return {750, 1150, 1};
    if (id == "wvfig") return {1200, 1800, 8};
    throw parameter_error("unknown figure id '" + id + "' (expected cfig, qfig, wvfig)");
}

inline std::vector<long> range_points(const FigureRange &r)
{
    if (r.step < 1 || r.hi < r.lo) throw parameter_error("bad figure range");
    std::vector<long> v;
    for (long x = r.lo; x <= r.hi; x += r.step) v.push_back(x);
    return v;
}

// (N, C_014(N), C_014(infinity)); C_014(N) from the exact engine.
inline Csv figure_cfig(const FigureRange &fr, const Options &o)
{
    auto pts = range_points(fr);
    if (pts.front() < 1) throw parameter_error("cfig needs N >= 1");
    std::string inf;
    {
        precision_scope s(o.prec);
        inf = to_fixed(rademacher_inf(4, o.prec), 12);
    }
    long P = o.prec;
    auto vals = parallel_map<std::string>(pts.size(), [&](size_t i) {
        Rational c = rademacher_c(0, 1, 4, pts[i]).rational_value();
        precision_scope s(P);
        return to_fixed(Real(c), 12);
    });
    Csv out{{"N", "C_014(N)", "C_014(inf)"}, {}};
    for (size_t i = 0; i < pts.size(); ++i) out.rows.push_back({std::to_string(pts[i]), vals[i], inf});
    return out;
}

// (N, Re(A_{-2}(i,N)) N^3 |w0|^{N/4}, main term for N = 0,1,2,3 mod 4)
inline Csv figure_qfig(const FigureRange &fr, const Options &o)
{
    auto pts = range_points(fr);
    long P = o.prec;
    SaddleContext ctx = make_context(4, P, series_order_for(1));
    std::vector<AsymCoeffSet> e1, e2;
    for (long v = 0; v < 4; ++v) {
        e1.push_back(e_coeffs(ctx, 1, -2, v, 1));
        e2.push_back(e_coeffs(ctx, -1, -2, v, 1));
    }
    auto rows = parallel_map<std::vector<std::string>>(pts.size(), [&](size_t i) {
        long N = pts[i];
        VerifiedValue v = precision_doubled([&] { return a_float(-2, 4, 1, N); }, 12, std::max(P, 60L));
        precision_scope s(P + 10);
        Real scale = pow(Real(N), 3L) * exp(-ctx.constants.U * Real(N) / 4);
        std::vector<std::string> row{std::to_string(N), to_fixed(v.value.re * scale, 8)};
        BigComplex W = exp(ctx.log_w0 * to_complex(Rational(-N, 4)));
        for (size_t c = 0; c < 4; ++c) {
            BigComplex main = (W * e1[c].coeffs[0] + conj(W) * conj(e2[c].coeffs[0])) / pow(Real(N), 3L);
            row.push_back(to_fixed(main.re * scale, 8));
        }
        return row;
    });
    return {{"N", "Re(A_-2(i,N))*N^3*|w0|^(N/4)", "main_N=0mod4", "main_N=1mod4", "main_N=2mod4", "main_N=3mod4"}, rows};
}

// (n, log|W_1(n,n)|, log p(n), log|Re(z0 e^{-3 z0/2} w0^{-n}/(pi i n^2))|)
inline Csv figure_wvfig(const FigureRange &fr, const Options &o)
{
    auto pts = range_points(fr);
    long P = o.prec;
    SaddleConstants sc = find_w0(P);
    auto rows = parallel_map<std::vector<std::string>>(pts.size(), [&](size_t i) {
        long n = pts[i];
        VerifiedValue v = precision_doubled([&] { return BigComplex(wave_float(1, n, n)); }, 12, std::max(P, 60L));
        precision_scope s(P + 10);
        Real lw = log(abs(v.value.re));
        Real lp = log(Real(unrestricted_p(n)));
        BigComplex pi_i(Real(Real::bits_tag{}, working_bits()), real_pi());
        BigComplex main = sc.z0 * exp(-(sc.z0 * to_complex(Rational(3, 2)))) *
                          exp(-(log(sc.w0) * BigComplex(Real(n)))) / (pi_i * BigComplex(Real(n) * Real(n)));
        Real lm = log(abs(main.re));
        return std::vector<std::string>{std::to_string(n), to_fixed(lw, 6), to_fixed(lp, 6), to_fixed(lm, 6)};
    });
    return {{"n", "log|W_1(n,n)|", "log p(n)", "log|Re(z0 e^(-3z0/2) w0^(-n)/(pi i n^2))|"}, rows};
}

inline Csv cmd_figure(const std::string &id, const Options &o, std::optional<FigureRange> range = std::nullopt)
{
    FigureRange fr = range ? *range : default_range(id);
    if (id == "cfig") return figure_cfig(fr, o);
    if (id == "qfig") return figure_qfig(fr, o);
    if (id == "wvfig") return figure_wvfig(fr, o);
    throw parameter_error("unknown figure id '" + id + "' (expected cfig, qfig, wvfig)");
}

} // namespace qexpand::app

#endif
