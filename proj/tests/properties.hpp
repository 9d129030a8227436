#ifndef HILBERT_TEST_PROPERTIES_HPP
#define HILBERT_TEST_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace properties {

struct Report {
    std::size_t ideals = 0;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
};

/// Random ideals with arity <= 5, at most 6 generators and exponents <= 6,
/// checked in degrees 0..15 against brute-force counts:
///   - oracle, lcm, syzygy, table and auto agree with enumeration
///   - HF(R/I, b) + dim I_b = F(a, b)
///   - invariance under generator permutation, variable relabelling and
///     minimalization
///   - the series expansion equals the Hilbert function
///   - table rows past the last stage satisfy the free recurrence
///   - annihilator values equal brute-force annihilator counts
Report run(std::uint64_t seed, std::size_t ideal_count);

} // namespace properties

#endif
