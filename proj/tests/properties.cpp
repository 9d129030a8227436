#include "properties.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "hilbert/hf_engine.hpp"
#include "hilbert/hilbert_series.hpp"
#include "test_support.hpp"

namespace properties {

namespace {

using namespace hilbert;

constexpr unsigned kMaxDegree = 15;

std::string describe(const oracle::RawIdeal& raw)
{
    std::ostringstream s;
    s << "arity " << raw.arity << " <";
    for (std::size_t i = 0; i < raw.gens.size(); ++i) {
        s << (i ? " " : "") << "(";
        for (std::size_t k = 0; k < raw.gens[i].size(); ++k)
            s << (k ? "," : "") << raw.gens[i][k];
        s << ")";
    }
    return s.str() + ">";
}

class Checker {
public:
    Checker(Report& report, std::string context) : report_(report), context_(std::move(context)) {}

    void expect(bool ok, const std::string& what)
    {
        ++report_.checks;
        if (!ok && report_.failures.size() < 50)
            report_.failures.push_back(context_ + ": " + what);
    }

    void same(const HilbertSequence& got, const HilbertSequence& want, const std::string& what)
    {
        expect(got == want, what + " gave " + oracle::show(got) + ", expected " + oracle::show(want));
    }

private:
    Report& report_;
    std::string context_;
};

void check_ideal(const oracle::RawIdeal& raw, std::mt19937_64& rng, Report& report)
{
    Checker check(report, describe(raw));
    const MonomialIdeal ideal = oracle::to_ideal(raw);
    const std::size_t a = raw.arity;
    const auto truth = oracle::counts(oracle::hf_sequence(raw, kMaxDegree));

    for (auto m : {MethodKind::oracle, MethodKind::lcm_lattice, MethodKind::syzygy, MethodKind::table,
                   MethodKind::automatic})
        check.same(hf(ideal, kMaxDegree, m), truth, std::string(to_string(m)));

    for (unsigned b = 0; b <= kMaxDegree; ++b) {
        Count total = truth[b] + static_cast<unsigned long>(oracle::ideal_count(raw, b));
        check.expect(total == pascal_F(a, b) && total == static_cast<unsigned long>(oracle::binomial(a - 1 + b, b)),
                     "rank-nullity fails at b=" + std::to_string(b));
    }

    auto shuffled = raw;
    std::shuffle(shuffled.gens.begin(), shuffled.gens.end(), rng);
    check.same(hf(oracle::to_ideal(shuffled), kMaxDegree, MethodKind::syzygy), truth, "permuted generators (syzygy)");
    check.same(hf(oracle::to_ideal(shuffled), kMaxDegree, MethodKind::table), truth, "permuted generators (table)");

    std::vector<std::size_t> perm(a);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const MonomialIdeal relabelled = to_ordered(ideal, VariableOrder(perm));
    check.same(hf(relabelled, kMaxDegree, MethodKind::lcm_lattice), truth, "relabelled variables (lcm)");
    check.same(hf(relabelled, kMaxDegree, MethodKind::table), truth, "relabelled variables (table)");

    check.same(hf(minimalize(ideal), kMaxDegree, MethodKind::syzygy), truth, "minimalized (syzygy)");
    check.same(hf(minimalize(ideal), kMaxDegree, MethodKind::lcm_lattice), truth, "minimalized (lcm)");

    check.same(expand_series(series_numerator(ideal), kMaxDegree), truth, "series expansion");

    // Table under a random order, two rows past the arity.
    std::shuffle(perm.begin(), perm.end(), rng);
    const VariableOrder order(perm);
    const std::size_t rows = a + 2;
    const HilbertTable table = hf_table(ideal, order, rows, kMaxDegree);
    std::size_t last_stage = 1;
    for (const auto& g : ideal.generators())
        last_stage = std::max(last_stage, stage_of(g, order));
    check.same(table.row(a), truth, "table row a");
    for (std::size_t r = last_stage + 1; r <= rows; ++r) {
        const auto& row = table.row(r);
        const auto& prev = table.row(r - 1);
        bool ok = row[0] == prev[0];
        for (std::size_t b = 1; b <= kMaxDegree; ++b)
            ok = ok && row[b] == prev[b] + row[b - 1];
        check.expect(ok, "row " + std::to_string(r) + " breaks the recurrence past stage " +
                             std::to_string(last_stage));
    }
    for (std::size_t r = 1; r <= rows; ++r) {
        const auto& row = table.rows[r - 1];
        const auto sub = oracle::from_ideal(row.ideal);
        check.same(row.values, oracle::counts(oracle::hf_sequence(sub, kMaxDegree)),
                   "table row " + std::to_string(r));
        std::vector<std::uint64_t> ann;
        for (unsigned b = 0; b <= kMaxDegree; ++b)
            ann.push_back(oracle::annihilator(sub, b));
        check.same(row.annihilator_values, oracle::counts(ann), "annihilator at stage " + std::to_string(r));
    }
}

} // namespace

Report run(std::uint64_t seed, std::size_t ideal_count)
{
    Report report;
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < ideal_count; ++i) {
        auto raw = oracle::random_ideal(rng, 5, 6, 6);
        check_ideal(raw, rng, report);
        ++report.ideals;
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.seconds = elapsed.count();
    return report;
}

} // namespace properties
