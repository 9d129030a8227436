#include "hilbert/pascal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hilbert {

Count pascal_F(std::size_t a, Degree b)
{
    if (b < 0)
        return 0;
    if (a == 0)
        return b == 0 ? 1 : 0;
    Count result;
    // binomial(a - 1 + b, a - 1); the smaller lower index is cheaper.
    auto n = static_cast<unsigned long>(a - 1) + static_cast<unsigned long>(b);
    auto k = std::min(static_cast<unsigned long>(a - 1), static_cast<unsigned long>(b));
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

PascalTable::PascalTable(std::size_t a_max, std::size_t b_max)
    : a_max_(a_max), b_max_(b_max), cells_(a_max * (b_max + 1))
{
    for (std::size_t a = 1; a <= a_max_; ++a) {
        for (std::size_t b = 0; b <= b_max_; ++b) {
            Count& cell = cells_[(a - 1) * (b_max_ + 1) + b];
            if (a == 1 || b == 0)
                cell = 1;
            else
                cell = at(a - 1, b) + at(a, b - 1);
        }
    }
}

const Count& PascalTable::at(std::size_t a, std::size_t b) const
{
    if (a < 1 || a > a_max_ || b > b_max_)
        throw std::out_of_range("pascal table index (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return cells_[(a - 1) * (b_max_ + 1) + b];
}

std::span<const Count> PascalTable::row(std::size_t a) const
{
    if (a < 1 || a > a_max_)
        throw std::out_of_range("pascal table row " + std::to_string(a));
    return std::span<const Count>(cells_).subspan((a - 1) * (b_max_ + 1), b_max_ + 1);
}

PascalTable pascal_table(std::size_t a_max, std::size_t b_max)
{
    return PascalTable(a_max, b_max);
}

BigInt ascending_factorial(const BigInt& x, std::size_t n)
{
    BigInt r = 1;
    for (std::size_t i = 0; i < n; ++i)
        r *= x + static_cast<unsigned long>(i);
    return r;
}

Count pascal_F_ascending(std::size_t a, Degree b, AscendingForm form)
{
    if (a < 1)
        throw PreconditionError("pascal_F_ascending requires a >= 1");
    if (b < 0)
        return 0;
    // term_i = [x]^i / i!, built as term_{i-1} * (x + i - 1) / i. term_i is a
    // binomial coefficient, so each exact division is legal.
    BigInt x = form == AscendingForm::by_b ? BigInt(static_cast<long>(b)) : BigInt(static_cast<long>(a - 1));
    std::size_t last = form == AscendingForm::by_b ? a - 1 : static_cast<std::size_t>(b);
    BigInt term = 1;
    Count sum = 1;
    for (std::size_t i = 1; i <= last; ++i) {
        term *= x + static_cast<unsigned long>(i - 1);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(i));
        sum += term;
    }
    return sum;
}

Count hf_principal(std::size_t a, Degree d, Degree b)
{
    if (a < 1 || d < 1)
        throw PreconditionError("hf_principal requires a >= 1 and d >= 1");
    return pascal_F(a, b) - pascal_F(a, b - d);
}

Count hf_two_generators(std::size_t a, Degree d_u, Degree d_v, Degree d_lcm, Degree b)
{
    if (a < 1 || d_u < 1 || d_v < 1)
        throw PreconditionError("hf_two_generators requires positive arity and degrees");
    if (d_lcm < std::max(d_u, d_v) || d_lcm > d_u + d_v) {
        throw PreconditionError("hf_two_generators: inconsistent degrees (d_u=" + std::to_string(d_u) +
                                ", d_v=" + std::to_string(d_v) + ", d_lcm=" + std::to_string(d_lcm) + ")");
    }
    // Under F(a, b<0) = 0 the four piecewise branches collapse into one sum.
    return pascal_F(a, b) - pascal_F(a, b - d_u) - pascal_F(a, b - d_v) + pascal_F(a, b - d_lcm);
}

BigInt eval_shifted_terms(std::span<const ShiftedFreeTerm> terms, Degree b)
{
    BigInt total = 0;
    for (const auto& t : terms) {
        if (t.sign >= 0)
            total += pascal_F(t.arity, b - t.shift);
        else
            total -= pascal_F(t.arity, b - t.shift);
    }
    return total;
}

} // namespace hilbert
