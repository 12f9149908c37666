#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <qexpand/app.hpp>

using namespace qexpand;
using namespace qexpand::app;

namespace
{

long default_precision()
{
    if (const char *e = std::getenv("QS_PREC")) {
        char *end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end == e || *end) throw parameter_error("QS_PREC must be an integer number of digits");
        return v;
    }
    return 60;
}

void emit(const OutputRecord &r, const std::string &format)
{
    if (format == "json") std::cout << to_json(r).dump(2) << "\n";
    else if (format == "csv") std::cout << render_csv(r);
    else std::cout << render_text(r);
}

void emit_csv(const Csv &c, const std::string &format, std::ostream &os)
{
    if (format != "json") {
        os << c.str();
        return;
    }
    json a = json::array();
    for (auto &row : c.rows) {
        json o;
        for (size_t i = 0; i < row.size(); ++i) o[c.header[i]] = row[i];
        a.push_back(o);
    }
    os << a.dump(2) << "\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Laurent coefficients of 1/(q)_N at roots of unity, Sylvester waves, and their saddle-point asymptotics"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.fallthrough();

    long prec = 0;
    std::string format = "text";
    bool exact_large = false;
    app.add_option("--prec", prec, "working precision in decimal digits (default 60, or $QS_PREC)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--exact-large", exact_large, "allow exact values beyond the rational engine's budget (verified float path)");

    auto *c_const = app.add_subcommand("const", "saddle-point constants w0, z0, U, V");

    std::string kind = "laurent";
    long k = 1, h = 0, m = 0, N = 1, n = 0;
    auto add_params = [&](CLI::App *s) {
        s->add_option("--kind", kind, "laurent or wave")->check(CLI::IsMember({"laurent", "wave"}));
        s->add_option("-k", k, "order of the root of unity");
        s->add_option("-h", h, "numerator of the root e^{2 pi i h/k}");
        s->add_option("-m", m, "Laurent index");
        s->add_option("-N", N, "number of factors in (q)_N");
        s->add_option("-n", n, "wave argument");
    };
    auto *c_exact = app.add_subcommand("exact", "exact Laurent coefficient or wave value");
    add_params(c_exact);
    auto *c_asym = app.add_subcommand("asym", "truncated asymptotic expansion");
    add_params(c_asym);
    std::vector<long> rs;
    bool compare = false;
    c_asym->add_option("-r", rs, "number of expansion terms (repeatable; default 5)")->check(CLI::PositiveNumber);
    c_asym->add_flag("--compare", compare, "also compute the exact value and the errors");

    std::string id, out;
    auto *c_table = app.add_subcommand("table", "reproduce one of the tables T1..T8");
    c_table->add_option("--id", id, "table id")->required();
    auto *c_fig = app.add_subcommand("figure", "figure data as CSV");
    c_fig->add_option("--id", id, "cfig, qfig or wvfig")->required();
    c_fig->add_option("--out", out, "output path (default stdout)");
    std::optional<long> from, to, step;
    c_fig->add_option("--from", from, "first abscissa");
    c_fig->add_option("--to", to, "last abscissa");
    c_fig->add_option("--step", step, "abscissa stride");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parameters;
    }

    try {
        Options o;
        o.prec = prec ? prec : default_precision();
        if (o.prec < 30 || o.prec > 100000) throw parameter_error("precision must be between 30 and 100000 digits");
        o.exact_large = exact_large;
        if (exact_large) o.progress = [](const std::string &s) { std::cerr << "\r" << s << "      " << std::flush; };

        if (c_const->parsed()) {
            emit(cmd_const(o), format);
        } else if (c_exact->parsed()) {
            emit(kind == "wave" ? cmd_exact_wave(k, N, n, o) : cmd_exact_laurent(k, h, m, N, o), format);
        } else if (c_asym->parsed()) {
            if (rs.empty()) rs = {5};
            emit(kind == "wave" ? cmd_asym_wave(k, N, n, rs, compare, o) : cmd_asym_laurent(k, h, m, N, rs, compare, o),
                 format);
        } else if (c_table->parsed()) {
            OutputRecord r = cmd_table(id, o);
            if (exact_large) std::cerr << "\n";
            if (format == "csv") std::cout << render_table_csv(r);
            else emit(r, format);
        } else if (c_fig->parsed()) {
            FigureRange fr = default_range(id);
            if (from) fr.lo = *from;
            if (to) fr.hi = *to;
            if (step) fr.step = *step;
            Csv c = cmd_figure(id, o, fr);
            if (out.empty() || out == "-") {
                emit_csv(c, format, std::cout);
            } else {
                std::ofstream f(out);
                if (!f) throw parameter_error("cannot open " + out);
                emit_csv(c, format, f);
            }
        }
    } catch (const convergence_error &e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return exit_convergence;
    } catch (const branch_error &e) {
        std::cerr << "branch error: " << e.what() << "\n";
        return exit_branch;
    } catch (const parameter_error &e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return exit_parameters;
    }
    return exit_ok;
}
