#ifndef HILBERT_ENGINE_OPTIONS_HPP
#define HILBERT_ENGINE_OPTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hilbert/pascal.hpp"

namespace hilbert {

/// HF values for degrees 0..b_max, index = degree.
using HilbertSequence = std::vector<Count>;

struct EngineOptions {
    /// The oracle refuses to enumerate more than this many monomials in a
    /// single degree.
    std::uint64_t enumeration_cap = 100'000'000;
    /// Largest generator count accepted by the lcm-lattice method.
    std::size_t lattice_cap = 20;
    /// Worker threads for the oracle and lattice; 0 or 1 runs serially.
    unsigned threads = 0;
};

/// Thread count from the HILBERT_THREADS environment variable. Unset or
/// unparsable falls back to the hardware concurrency; "0" means serial.
unsigned threads_from_environment();

} // namespace hilbert

#endif
