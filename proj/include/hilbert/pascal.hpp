#ifndef HILBERT_PASCAL_HPP
#define HILBERT_PASCAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "hilbert/monomial.hpp"

namespace hilbert {

/// Signed arbitrary-precision integer.
using BigInt = mpz_class;
/// A Hilbert function value or binomial; non-negative by construction.
using Count = mpz_class;

/// Number of monomials of degree b in a variables: binomial(a - 1 + b, b),
/// and 0 for b < 0. Arity 0 is accepted and gives the Hilbert function of
/// the coefficient field (1 at b = 0, else 0).
Count pascal_F(std::size_t a, Degree b);

/// Rows 1..a_max, columns 0..b_max of the Pascal table, filled by
/// F(a,b) = F(a-1,b) + F(a,b-1) from the boundary F(1,b) = F(a,0) = 1.
class PascalTable {
public:
    PascalTable(std::size_t a_max, std::size_t b_max);

    std::size_t rows() const noexcept { return a_max_; }
    std::size_t columns() const noexcept { return b_max_ + 1; }
    /// Entry (a, b), 1-based row, 0-based column.
    const Count& at(std::size_t a, std::size_t b) const;
    std::span<const Count> row(std::size_t a) const;

private:
    std::size_t a_max_;
    std::size_t b_max_;
    std::vector<Count> cells_;
};

PascalTable pascal_table(std::size_t a_max, std::size_t b_max);

enum class AscendingForm {
    by_b, ///< sum_{i=0}^{a-1} [b]^i / i!
    by_a  ///< sum_{j=0}^{b} [a-1]^j / j!
};

/// Ascending factorial [x]^n = x (x+1) ... (x+n-1), with [x]^0 = 1.
BigInt ascending_factorial(const BigInt& x, std::size_t n);

/// F(a, b) as a sum of ascending factorials divided by factorials. Each
/// summand is accumulated from the previous one, so every division is exact.
Count pascal_F_ascending(std::size_t a, Degree b, AscendingForm form);

/// HF(k[x_1..x_a]/<p>, b) for deg p = d.
Count hf_principal(std::size_t a, Degree d, Degree b);

/// HF(k[x_1..x_a]/<u, v>, b) from deg u, deg v and deg lcm(u, v).
/// Throws PreconditionError unless max(d_u, d_v) <= d_lcm <= d_u + d_v.
Count hf_two_generators(std::size_t a, Degree d_u, Degree d_v, Degree d_lcm, Degree b);

/// One signed, shifted copy of the free ring: sign * F(arity, b - shift).
struct ShiftedFreeTerm {
    std::size_t arity = 1;
    Degree shift = 0;
    int sign = 1;
};

BigInt eval_shifted_terms(std::span<const ShiftedFreeTerm> terms, Degree b);

} // namespace hilbert

#endif
