#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbert/hilbert_series.hpp"
#include "hilbert/stanley_reisner.hpp"

namespace hilbert::cli {

namespace {

using Json = nlohmann::ordered_json;

/// A parse failure already rendered with its caret line.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class F>
auto parsing(const std::string& flag, const std::string& text, F&& f)
{
    try {
        return f(text);
    } catch (const ParseError& e) {
        throw InputError(flag + ": " + describe(e, text));
    }
}

OutputFormat format_from_string(const std::string& s)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    return OutputFormat::plain;
}

Json strings(const HilbertSequence& values)
{
    Json arr = Json::array();
    for (const auto& v : values)
        arr.push_back(v.get_str());
    return arr;
}

Json ideal_json(const MonomialIdeal& ideal, const Ring& ring)
{
    Json arr = Json::array();
    for (const auto& g : ideal.generators())
        arr.push_back(render(g, ring));
    return arr;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

/// Right-aligned rows sharing column widths.
void write_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out << ' ';
            if (c == 0)
                out << std::left << std::setw(static_cast<int>(widths[c])) << row[c] << std::right;
            else
                out << std::setw(static_cast<int>(widths[c])) << row[c];
        }
        out << '\n';
    }
}

std::vector<std::string> degree_header(const std::string& label, std::size_t count)
{
    std::vector<std::string> row{label};
    for (std::size_t b = 0; b < count; ++b)
        row.push_back(std::to_string(b));
    return row;
}

std::vector<std::string> value_row(const std::string& label, const HilbertSequence& values)
{
    std::vector<std::string> row{label};
    for (const auto& v : values)
        row.push_back(v.get_str());
    return row;
}

void write_sequence(std::ostream& out, OutputFormat format, const HilbertSequence& values, Json header)
{
    switch (format) {
    case OutputFormat::plain:
        write_grid(out, {degree_header("b", values.size()), value_row("HF", values)});
        break;
    case OutputFormat::csv:
        out << "degree,value\n";
        for (std::size_t b = 0; b < values.size(); ++b)
            out << b << ',' << values[b].get_str() << '\n';
        break;
    case OutputFormat::json: {
        Json arr = Json::array();
        for (std::size_t b = 0; b < values.size(); ++b)
            arr.push_back({{"degree", b}, {"value", values[b].get_str()}});
        header["values"] = std::move(arr);
        out << header.dump(2) << '\n';
        break;
    }
    }
}

template <class F>
double time_best(unsigned repetitions, F&& f)
{
    double best = 0;
    for (unsigned r = 0; r < std::max(1U, repetitions); ++r) {
        auto start = std::chrono::steady_clock::now();
        f();
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        best = r == 0 ? elapsed.count() : std::min(best, elapsed.count());
    }
    return best;
}

Ring bench_ring(std::size_t arity)
{
    static const std::vector<std::string> names{"x", "y", "z", "u", "v", "w"};
    return Ring(std::vector<std::string>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(arity)));
}

} // namespace

std::vector<NamedEngine> standard_engines(const EngineOptions& options)
{
    std::vector<NamedEngine> engines;
    for (auto m : {MethodKind::oracle, MethodKind::lcm_lattice, MethodKind::syzygy, MethodKind::table}) {
        engines.push_back({std::string(to_string(m)), [m, options](const MonomialIdeal& ideal, Degree b_max) {
                               return hf(ideal, b_max, m, options);
                           }});
    }
    return engines;
}

int compare(const Ring& ring, const MonomialIdeal& ideal, Degree max_degree, const std::vector<NamedEngine>& engines,
            OutputFormat format, std::ostream& out)
{
    std::vector<HilbertSequence> results;
    for (const auto& e : engines)
        results.push_back(e.run(ideal, max_degree));

    std::vector<std::size_t> differing;
    for (std::size_t b = 0; b <= static_cast<std::size_t>(max_degree); ++b) {
        bool same = std::all_of(results.begin(), results.end(), [&](const HilbertSequence& r) {
            return r.size() > b && results.front().size() > b && r[b] == results.front()[b];
        });
        if (!same)
            differing.push_back(b);
    }
    const bool agree = differing.empty();
    auto cell = [&](std::size_t engine, std::size_t b) {
        return b < results[engine].size() ? results[engine][b].get_str() : std::string("-");
    };

    if (format == OutputFormat::json) {
        Json doc;
        doc["ring"] = ring.names();
        doc["ideal"] = ideal_json(ideal, ring);
        doc["agree"] = agree;
        Json methods = Json::object();
        for (std::size_t e = 0; e < engines.size(); ++e)
            methods[engines[e].name] = strings(results[e]);
        doc["methods"] = std::move(methods);
        doc["differing_degrees"] = differing;
        out << doc.dump(2) << '\n';
    } else if (format == OutputFormat::csv) {
        out << "degree";
        for (const auto& e : engines)
            out << ',' << e.name;
        out << ",agree\n";
        for (std::size_t b = 0; b <= static_cast<std::size_t>(max_degree); ++b) {
            out << b;
            for (std::size_t e = 0; e < engines.size(); ++e)
                out << ',' << cell(e, b);
            out << ',' << (std::find(differing.begin(), differing.end(), b) == differing.end() ? "yes" : "no")
                << '\n';
        }
    } else if (agree) {
        out << "AGREE";
        for (std::size_t e = 0; e < engines.size(); ++e)
            out << (e == 0 ? " (" : ", ") << engines[e].name;
        out << "; degrees 0.." << max_degree << ")\n";
    } else {
        out << "DISAGREE at " << differing.size() << " degree(s)\n";
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"b"};
        for (const auto& e : engines)
            header.push_back(e.name);
        rows.push_back(std::move(header));
        for (auto b : differing) {
            std::vector<std::string> row{std::to_string(b)};
            for (std::size_t e = 0; e < engines.size(); ++e)
                row.push_back(cell(e, b));
            rows.push_back(std::move(row));
        }
        write_grid(out, rows);
    }
    return agree ? exit_code::ok : exit_code::disagreement;
}

std::vector<BenchCase> bench_cases(const std::string& suite, std::uint64_t seed)
{
    std::vector<std::size_t> counts;
    std::vector<std::size_t> arities;
    if (suite == "default") {
        for (std::size_t n = 2; n <= 16; ++n)
            counts.push_back(n);
        arities = {3, 4, 5, 6};
    } else if (suite == "quick") {
        counts = {2, 4, 8, 12};
        arities = {3, 5};
    } else {
        throw std::invalid_argument("unknown bench suite '" + suite + "' (expected default or quick)");
    }

    constexpr Exponent exponent_bound = 6;
    std::mt19937_64 rng(seed);
    std::vector<BenchCase> cases;
    for (auto n : counts) {
        for (auto arity : arities) {
            std::vector<Monomial> gens;
            while (gens.size() < n) {
                std::vector<Exponent> e(arity);
                for (auto& x : e)
                    x = static_cast<Exponent>(rng() % (exponent_bound + 1));
                Monomial m(std::move(e));
                if (!m.is_one())
                    gens.push_back(std::move(m));
            }
            BenchCase c;
            c.id = cases.size();
            c.ring = bench_ring(arity);
            c.ideal = MonomialIdeal(arity, std::move(gens));
            cases.push_back(std::move(c));
        }
    }
    return cases;
}

BenchReport run_bench(const BenchConfig& config)
{
    BenchReport report;
    report.suite = config.suite;
    report.seed = config.seed;
    report.repetitions = config.repetitions;
    report.cases = bench_cases(config.suite, config.seed);
    const Degree b_max = config.max_degree;
    for (auto& c : report.cases) {
        auto attempt = [&](BenchMethodResult& r, auto&& body) {
            try {
                r.seconds = time_best(config.repetitions, body);
            } catch (const ResourceCapError& e) {
                r.error = e.what();
                r.values.clear();
            }
        };

        BenchMethodResult lattice;
        lattice.method = "lcm";
        attempt(lattice, [&] {
            LatticeStats stats;
            lattice.values = hf_lcm_lattice(c.ideal, b_max, false, config.options, &stats);
            lattice.subsets_visited = stats.subsets_visited;
        });
        c.methods.push_back(std::move(lattice));

        BenchMethodResult syzygy;
        syzygy.method = "syzygy";
        attempt(syzygy, [&] {
            SyzygyStats stats;
            syzygy.values = hf_syzygy(c.ideal, b_max, &stats);
            syzygy.memo_entries = stats.memo_entries;
            syzygy.memo_hit_rate = stats.hit_rate();
        });
        c.methods.push_back(std::move(syzygy));

        BenchMethodResult table;
        table.method = "table";
        attempt(table, [&] {
            const std::size_t a = c.ideal.arity();
            table.values = hf_table(c.ideal, VariableOrder::identity(a), a, b_max, config.options).row(a);
        });
        c.methods.push_back(std::move(table));
    }
    return report;
}

void write_bench(const BenchReport& report, OutputFormat format, std::ostream& out)
{
    if (format == OutputFormat::json) {
        Json doc;
        doc["suite"] = report.suite;
        doc["seed"] = report.seed;
        doc["repetitions"] = report.repetitions;
        Json cases = Json::array();
        for (const auto& c : report.cases) {
            Json jc;
            jc["id"] = c.id;
            jc["arity"] = c.ideal.arity();
            jc["generators"] = c.ideal.size();
            jc["ring"] = c.ring.names();
            jc["ideal"] = ideal_json(c.ideal, c.ring);
            Json methods = Json::array();
            for (const auto& m : c.methods) {
                Json jm;
                jm["method"] = m.method;
                jm["seconds"] = m.seconds;
                jm["memo_entries"] = m.memo_entries;
                jm["memo_hit_rate"] = m.memo_hit_rate;
                jm["subsets_visited"] = m.subsets_visited;
                jm["values"] = strings(m.values);
                if (!m.error.empty())
                    jm["error"] = m.error;
                methods.push_back(std::move(jm));
            }
            jc["methods"] = std::move(methods);
            cases.push_back(std::move(jc));
        }
        doc["cases"] = std::move(cases);
        out << doc.dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::csv) {
        out << "case,arity,generators,method,seconds,memo_entries,memo_hit_rate,subsets_visited,error,ideal\n";
        for (const auto& c : report.cases) {
            for (const auto& m : c.methods) {
                out << c.id << ',' << c.ideal.arity() << ',' << c.ideal.size() << ',' << m.method << ','
                    << m.seconds << ',' << m.memo_entries << ',' << m.memo_hit_rate << ',' << m.subsets_visited
                    << ',' << csv_field(m.error) << ',' << csv_field(render(c.ideal, c.ring)) << '\n';
            }
        }
        return;
    }
    out << "suite " << report.suite << ", seed " << report.seed << ", best of " << report.repetitions << '\n';
    std::vector<std::vector<std::string>> rows{
        {"case", "a", "n", "lcm ms", "subsets", "syzygy ms", "memo", "hit rate", "table ms"}};
    auto ms = [](const BenchMethodResult& m) {
        if (!m.error.empty())
            return std::string("cap");
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << m.seconds * 1000.0;
        return s.str();
    };
    for (const auto& c : report.cases) {
        const auto& l = c.methods[0];
        const auto& s = c.methods[1];
        const auto& t = c.methods[2];
        std::ostringstream rate;
        rate << std::fixed << std::setprecision(3) << s.memo_hit_rate;
        rows.push_back({std::to_string(c.id), std::to_string(c.ideal.arity()), std::to_string(c.ideal.size()), ms(l),
                        std::to_string(l.subsets_visited), ms(s), std::to_string(s.memo_entries), rate.str(), ms(t)});
    }
    write_grid(out, rows);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hilbert functions and series of monomial quotient rings", "hilbert"};
    app.require_subcommand(1);

    std::string ring_text;
    std::string ideal_text;
    std::string facets_text;
    std::string order_text;
    std::string method_text = "auto";
    std::string format_text = "plain";
    std::string suite = "default";
    Degree max_degree = 10;
    std::size_t max_row = 0;
    long long expand_to = -1;
    std::uint64_t seed = 1;
    unsigned repetitions = 1;
    EngineOptions options;
    options.threads = threads_from_environment();

    auto common = [&](CLI::App* sub, bool needs_ideal) {
        sub->add_option("--ring", ring_text, "Variables, e.g. x,y,z")->required();
        if (needs_ideal)
            sub->add_option("--ideal", ideal_text, "Generators, e.g. \"x^2*y, x*z^2\"")->required();
        sub->add_option("--format", format_text, "Output format")
            ->check(CLI::IsMember({"plain", "csv", "json"}));
        sub->add_option("--enum-cap", options.enumeration_cap, "Oracle limit on monomials per degree");
        sub->add_option("--lattice-cap", options.lattice_cap, "Largest generator count for the lcm lattice");
    };
    auto degree_flag = [&](CLI::App* sub) {
        sub->add_option("--max-degree", max_degree, "Last degree b")->check(CLI::NonNegativeNumber);
    };

    auto* eval = app.add_subcommand("eval", "Hilbert function for degrees 0..max-degree");
    common(eval, true);
    degree_flag(eval);
    eval->add_option("--method", method_text, "Method")
        ->check(CLI::IsMember({"oracle", "lcm", "syzygy", "table", "auto"}));

    auto* table = app.add_subcommand("table", "Hilbert function table, one row per variable count");
    common(table, true);
    degree_flag(table);
    table->add_option("--max-row", max_row, "Last row a (default: ring arity)");
    table->add_option("--order", order_text, "Order in which variables are introduced");

    auto* series = app.add_subcommand("series", "Hilbert series as a rational function");
    common(series, true);
    series->add_option("--expand-to", expand_to, "Also print coefficients 0..N")->check(CLI::NonNegativeNumber);

    auto* cmp = app.add_subcommand("compare", "Cross-check all four methods");
    common(cmp, true);
    degree_flag(cmp);

    auto* bench = app.add_subcommand("bench", "Time the lattice, syzygy and table methods");
    bench->add_option("--suite", suite, "Ideal family")->check(CLI::IsMember({"default", "quick"}));
    bench->add_option("--repetitions", repetitions, "Runs per method; the fastest is reported")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "Seed for the ideal generator");
    bench->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
    bench->add_option("--max-degree", max_degree, "Last degree b")->check(CLI::NonNegativeNumber);
    bench->add_option("--lattice-cap", options.lattice_cap, "Largest generator count for the lcm lattice");

    auto* sr = app.add_subcommand("sr", "Stanley-Reisner ideal and Hilbert function of a complex");
    common(sr, false);
    degree_flag(sr);
    sr->add_option("--facets", facets_text, "Facets, e.g. \"x,y,z; xh,y,z\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::input_error;
    }

    const OutputFormat format = format_from_string(format_text);
    try {
        if (bench->parsed()) {
            BenchConfig config;
            config.suite = suite;
            config.repetitions = repetitions;
            config.seed = seed;
            config.max_degree = max_degree;
            config.options = options;
            write_bench(run_bench(config), format, out);
            return exit_code::ok;
        }

        const Ring ring = parsing("--ring", ring_text, [](const std::string& t) { return parse_ring(t); });

        if (sr->parsed()) {
            auto complex = parsing("--facets", facets_text,
                                   [&](const std::string& t) { return parse_complex(t, ring); });
            auto nonfaces = minimal_nonfaces(complex);
            auto ideal = stanley_reisner_ideal(complex);
            auto values = hf(ideal, max_degree, MethodKind::automatic, options);
            if (format == OutputFormat::plain) {
                out << "minimal non-faces:";
                for (const auto& f : nonfaces)
                    out << ' ' << render(f);
                out << "\nideal: " << render(ideal, ring) << '\n';
                write_sequence(out, format, values, {});
            } else if (format == OutputFormat::csv) {
                write_sequence(out, format, values, {});
            } else {
                Json doc;
                doc["ring"] = ring.names();
                doc["facets"] = complex.facets;
                doc["minimal_nonfaces"] = nonfaces;
                doc["ideal"] = ideal_json(ideal, ring);
                write_sequence(out, format, values, std::move(doc));
            }
            return exit_code::ok;
        }

        const MonomialIdeal ideal =
            parsing("--ideal", ideal_text, [&](const std::string& t) { return parse_ideal(t, ring); });

        if (eval->parsed()) {
            const MethodKind method = method_from_string(method_text).value_or(MethodKind::automatic);
            auto values = hf(ideal, max_degree, method, options);
            Json doc;
            doc["ring"] = ring.names();
            doc["ideal"] = ideal_json(ideal, ring);
            doc["method"] = std::string(to_string(method));
            write_sequence(out, format, values, std::move(doc));
            return exit_code::ok;
        }

        if (table->parsed()) {
            VariableOrder order = order_text.empty()
                                      ? VariableOrder::identity(ring.arity())
                                      : parsing("--order", order_text,
                                                [&](const std::string& t) { return parse_order(t, ring); });
            std::size_t rows = max_row == 0 ? ring.arity() : max_row;
            auto result = hf_table(ideal, order, rows, max_degree, options);
            if (format == OutputFormat::json) {
                Json doc;
                doc["ring"] = ring.names();
                doc["ideal"] = ideal_json(ideal, ring);
                std::vector<std::string> order_names;
                for (auto p : order.positions())
                    order_names.push_back(ring[p]);
                doc["order"] = order_names;
                Json jrows = Json::array();
                for (const auto& r : result.rows)
                    jrows.push_back({{"a", r.a}, {"values", strings(r.values)}});
                doc["rows"] = std::move(jrows);
                out << doc.dump(2) << '\n';
            } else if (format == OutputFormat::csv) {
                out << "a";
                for (Degree b = 0; b <= max_degree; ++b)
                    out << ',' << b;
                out << '\n';
                for (const auto& r : result.rows) {
                    out << r.a;
                    for (const auto& v : r.values)
                        out << ',' << v.get_str();
                    out << '\n';
                }
            } else {
                std::vector<std::vector<std::string>> grid{
                    degree_header("a\\b", static_cast<std::size_t>(max_degree) + 1)};
                for (const auto& r : result.rows)
                    grid.push_back(value_row(std::to_string(r.a), r.values));
                write_grid(out, grid);
            }
            return exit_code::ok;
        }

        if (series->parsed()) {
            auto numerator = series_numerator(minimalize(ideal), options);
            HilbertSequence expansion;
            if (expand_to >= 0)
                expansion = expand_series(numerator, expand_to);
            if (format == OutputFormat::json) {
                Json doc;
                doc["ring"] = ring.names();
                doc["ideal"] = ideal_json(ideal, ring);
                doc["series"] = render(numerator);
                Json coeffs = Json::array();
                for (const auto& [d, c] : numerator.coefficients())
                    coeffs.push_back({{"degree", d}, {"coefficient", c.get_str()}});
                doc["numerator"] = std::move(coeffs);
                doc["denominator_exponent"] = numerator.arity();
                if (expand_to >= 0)
                    doc["expansion"] = strings(expansion);
                out << doc.dump(2) << '\n';
            } else if (format == OutputFormat::csv) {
                out << "kind,degree,value\n";
                for (const auto& [d, c] : numerator.coefficients())
                    out << "numerator," << d << ',' << c.get_str() << '\n';
                for (std::size_t b = 0; b < expansion.size(); ++b)
                    out << "expansion," << b << ',' << expansion[b].get_str() << '\n';
            } else {
                out << render(numerator) << '\n';
                if (expand_to >= 0)
                    write_sequence(out, format, expansion, {});
            }
            return exit_code::ok;
        }

        if (cmp->parsed())
            return compare(ring, ideal, max_degree, standard_engines(options), format, out);
    } catch (const InvalidComplex& e) {
        err << "error: invalid facet set\n" << e.report().describe();
        return exit_code::input_error;
    } catch (const ResourceCapError& e) {
        err << "error: resource cap exceeded: " << e.what() << '\n';
        return exit_code::resource_cap;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << (std::string_view(e.what()).ends_with('\n') ? "" : "\n");
        return exit_code::input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal_error;
    }
    return exit_code::input_error;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    for (const auto& a : args)
        argv.push_back(a.c_str());
    argv.push_back(nullptr);
    return run(static_cast<int>(args.size()), argv.data(), out, err);
}

} // namespace hilbert::cli
