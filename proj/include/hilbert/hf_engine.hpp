#ifndef HILBERT_HF_ENGINE_HPP
#define HILBERT_HF_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hilbert/engine_options.hpp"
#include "hilbert/lcm_lattice.hpp"
#include "hilbert/monomial.hpp"
#include "hilbert/pascal.hpp"

namespace hilbert {

enum class MethodKind { oracle, lcm_lattice, syzygy, table, automatic };

/// "oracle", "lcm", "syzygy", "table", "auto".
std::string_view to_string(MethodKind method) noexcept;
std::optional<MethodKind> method_from_string(std::string_view name) noexcept;

// ---------------------------------------------------------------------------
// Brute force

/// Counts the degree-b monomials outside the ideal by direct enumeration.
/// Throws ResourceCapError if there are more than options.enumeration_cap
/// monomials of degree b.
Count hf_oracle(const MonomialIdeal& ideal, Degree b, const EngineOptions& options = {});

/// hf_oracle for every b in 0..b_max; degrees run in parallel.
HilbertSequence hf_oracle_sequence(const MonomialIdeal& ideal, Degree b_max, const EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Syzygy recursion
//
//   HF(R/<p_1..p_r>, t) = F(a,t) - F(a,t-d_1)
//                         - sum_{j>=2} HF(R/<m_1j, ..., m_(j-1)j>, t - d_j)
//
// with m_ij = lcm(p_i, p_j) / p_j. Sub-ideals are canonicalized and memoized.

struct SyzygyStats {
    std::size_t memo_entries = 0;
    std::uint64_t memo_lookups = 0;
    std::uint64_t memo_hits = 0;

    double hit_rate() const noexcept
    {
        return memo_lookups == 0 ? 0.0 : static_cast<double>(memo_hits) / static_cast<double>(memo_lookups);
    }
};

HilbertSequence hf_syzygy(const MonomialIdeal& ideal, Degree b_max, SyzygyStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Hilbert function table

/// One summand of the annihilator of x_a: the quotient of k[x_1..x_{a-1}]
/// by the syzygies of a new generator p_j against all earlier generators,
/// shifted by deg q_j = deg p_j - 1.
struct AnnihilatorTerm {
    /// Index of p_j in the re-indexed generator list.
    std::size_t generator_index = 0;
    /// m_1j, ..., m_(j-1)j in ordered coordinates of arity a - 1.
    MonomialIdeal syzygies;
    /// minimalize(syzygies).
    MonomialIdeal ideal;
    Degree shift = 0;
};

/// Decomposition of HF((0 : x_a)_{M_a}) for one stage a.
struct AnnihilatorDecomposition {
    std::size_t stage = 0;
    /// Arity of the sub-quotients (a - 1).
    std::size_t ring_arity = 0;
    /// 1 iff the globally first generator is introduced at this stage; it
    /// contributes a free k[x_1..x_{a-1}] shifted by delta_shift.
    int delta = 0;
    Degree delta_shift = 0;
    std::vector<AnnihilatorTerm> terms;

    bool is_zero() const noexcept { return delta == 0 && terms.empty(); }
};

/// `ideal` must already satisfy the re-indexing criteria for `order` (see
/// reindex_for_table); a violation raises PreconditionError. 1 <= a is
/// required; stages past the arity have a zero annihilator.
AnnihilatorDecomposition annihilator_decomposition(const MonomialIdeal& ideal, const VariableOrder& order,
                                                   std::size_t a);

/// HF of the annihilator for degrees 0..b_max; sub-quotients are evaluated
/// by the automatic dispatcher.
HilbertSequence annihilator_hf(const AnnihilatorDecomposition& decomposition, Degree b_max,
                               const EngineOptions& options = {});

struct HilbertRow {
    std::size_t a = 0;
    /// I_a in ordered coordinates of arity a.
    MonomialIdeal ideal;
    AnnihilatorDecomposition annihilator;
    HilbertSequence annihilator_values;
    HilbertSequence values;
};

struct HilbertTable {
    VariableOrder order;
    /// Generators after re-indexing, original coordinates.
    MonomialIdeal generators;
    std::vector<HilbertRow> rows;

    /// Values of row a (1-based).
    const HilbertSequence& row(std::size_t a) const;
};

/// Rows a = 1..a_max of the Hilbert function table: row 1 directly, later
/// rows from HF(M_a, b) = HF(M_{a-1}, b) + HF(M_a, b-1) - HF((0:x_a), b-1).
HilbertTable hf_table(const MonomialIdeal& ideal, const VariableOrder& order, std::size_t a_max, Degree b_max,
                      const EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Dispatcher

/// HF(R/I, b) for b = 0..b_max. `automatic` uses closed forms for up to two
/// minimal generators, the lcm lattice up to options.lattice_cap generators
/// and the syzygy recursion beyond. Every method returns the same values.
HilbertSequence hf(const MonomialIdeal& ideal, Degree b_max, MethodKind method = MethodKind::automatic,
                   const EngineOptions& options = {});

} // namespace hilbert

#endif
