#ifndef HILBERT_LCM_LATTICE_HPP
#define HILBERT_LCM_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hilbert/engine_options.hpp"
#include "hilbert/monomial.hpp"

namespace hilbert {

/// lcm of one nonempty subset of the generators.
struct LatticeEntry {
    Monomial lcm;
    Degree degree = 0;
    /// Bit i set iff generator i belongs to the subset.
    std::uint64_t subset = 0;
};

/// The lcm lattice of an ideal: layer r lists the lcms of all r-subsets of
/// the generators, in lexicographic order of the index sets. Layer r
/// contributes with sign (-1)^(r-1) to HF(I, b).
class LcmLattice {
public:
    LcmLattice(std::size_t arity, std::size_t generator_count, std::vector<std::vector<LatticeEntry>> layers);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t generator_count() const noexcept { return generator_count_; }
    std::size_t layer_count() const noexcept { return layers_.size(); }
    /// 1-based layer index.
    const std::vector<LatticeEntry>& layer(std::size_t r) const;

private:
    std::size_t arity_;
    std::size_t generator_count_;
    std::vector<std::vector<LatticeEntry>> layers_;
};

/// Throws PreconditionError for the zero ideal and ResourceCapError when the
/// generator count exceeds options.lattice_cap.
LcmLattice build_lcm_lattice(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// An entry of layer r cancelled against an entry of layer r + 1 of the
/// same degree. Indices point into the respective layers.
struct CancelledPair {
    std::size_t layer = 0;
    Degree degree = 0;
    std::size_t lower_index = 0;
    std::size_t upper_index = 0;
};

/// Pairs equal-degree entries of adjacent layers, sweeping r = 1, 2, ...
/// over whatever earlier sweeps left uncancelled. Identical monomials are
/// paired first, then remaining entries of equal degree.
std::vector<CancelledPair> cancel_adjacent_pairs(const LcmLattice& lattice);

/// Per-layer degree histogram of the lattice, which is all the
/// inclusion-exclusion sum needs.
struct LatticeProfile {
    std::size_t arity = 0;
    std::size_t generator_count = 0;
    /// layers[r][d] = number of r-subsets whose lcm has degree d; index 0 unused.
    std::vector<std::map<Degree, std::uint64_t>> layers;
    std::uint64_t subsets_visited = 0;
};

LatticeProfile lattice_profile(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// Cancellations applied to a profile: `count` pairs of degree `degree`
/// between layer `layer` and layer + 1.
struct ProfileCancellation {
    std::size_t layer = 0;
    Degree degree = 0;
    std::uint64_t count = 0;
};

/// Removes equal-degree pairs from adjacent layers in place, with the same
/// sweep order as cancel_adjacent_pairs.
std::vector<ProfileCancellation> cancel_profile(LatticeProfile& profile);

/// F(a, b) - sum_r (-1)^(r-1) sum_d profile[r][d] F(a, b - d).
Count evaluate_profile(const LatticeProfile& profile, Degree b);

struct LatticeStats {
    std::uint64_t subsets_visited = 0;
    std::vector<ProfileCancellation> cancellations;
};

/// Inclusion-exclusion over the lcm lattice. The zero ideal yields F(a, .).
HilbertSequence hf_lcm_lattice(const MonomialIdeal& ideal, Degree b_max, bool cancel,
                               const EngineOptions& options = {}, LatticeStats* stats = nullptr);

} // namespace hilbert

#endif
