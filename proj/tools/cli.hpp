#ifndef HILBERT_TOOLS_CLI_HPP
#define HILBERT_TOOLS_CLI_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hilbert/hf_engine.hpp"
#include "hilbert/parser.hpp"

namespace hilbert::cli {

enum class OutputFormat { plain, csv, json };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int disagreement = 1;
inline constexpr int input_error = 2;
inline constexpr int resource_cap = 3;
/// Anything else: a bug, not bad input.
inline constexpr int internal_error = 4;
} // namespace exit_code

struct NamedEngine {
    std::string name;
    std::function<HilbertSequence(const MonomialIdeal&, Degree)> run;
};

/// oracle, lcm, syzygy and table.
std::vector<NamedEngine> standard_engines(const EngineOptions& options);

/// Runs every engine on degrees 0..max_degree and prints "AGREE" or a
/// per-degree diff. Returns exit_code::ok or exit_code::disagreement.
int compare(const Ring& ring, const MonomialIdeal& ideal, Degree max_degree, const std::vector<NamedEngine>& engines,
            OutputFormat format, std::ostream& out);

struct BenchConfig {
    /// "default": generator counts 2..16 by arity 3..6; "quick": a small
    /// subset of those.
    std::string suite = "default";
    unsigned repetitions = 1;
    std::uint64_t seed = 1;
    Degree max_degree = 12;
    EngineOptions options;
};

struct BenchMethodResult {
    std::string method;
    /// Fastest of the repetitions.
    double seconds = 0;
    HilbertSequence values;
    std::size_t memo_entries = 0;
    double memo_hit_rate = 0;
    std::uint64_t subsets_visited = 0;
    /// Non-empty when the method hit a resource cap.
    std::string error;
};

struct BenchCase {
    std::size_t id = 0;
    Ring ring;
    MonomialIdeal ideal;
    std::vector<BenchMethodResult> methods;
};

struct BenchReport {
    std::string suite;
    std::uint64_t seed = 0;
    unsigned repetitions = 1;
    std::vector<BenchCase> cases;
};

/// The ideals of a suite, generated from `seed` alone. Throws
/// std::invalid_argument for an unknown suite name.
std::vector<BenchCase> bench_cases(const std::string& suite, std::uint64_t seed);

BenchReport run_bench(const BenchConfig& config);

void write_bench(const BenchReport& report, OutputFormat format, std::ostream& out);

/// The whole command line: argv[0] is the program name. Returns the exit
/// code; nothing is written to the process streams directly.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hilbert::cli

#endif
