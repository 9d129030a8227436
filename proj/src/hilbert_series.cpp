#include "hilbert/hilbert_series.hpp"

#include <stdexcept>
#include <string>

#include "hilbert/lcm_lattice.hpp"

namespace hilbert {

SeriesNumerator::SeriesNumerator(std::size_t arity, std::map<Degree, BigInt> coefficients) : arity_(arity)
{
    for (auto& [d, c] : coefficients)
        add(d, c);
}

BigInt SeriesNumerator::coefficient(Degree d) const
{
    auto it = coefficients_.find(d);
    return it == coefficients_.end() ? BigInt(0) : it->second;
}

Degree SeriesNumerator::degree() const noexcept
{
    return coefficients_.empty() ? -1 : coefficients_.rbegin()->first;
}

BigInt SeriesNumerator::value_at_one() const
{
    BigInt sum = 0;
    for (const auto& [d, c] : coefficients_)
        sum += c;
    return sum;
}

void SeriesNumerator::add(Degree d, const BigInt& c)
{
    if (d < 0)
        throw PreconditionError("series numerator degrees must be non-negative");
    if (c == 0)
        return;
    BigInt& slot = coefficients_[d];
    slot += c;
    if (slot == 0)
        coefficients_.erase(d);
}

SeriesNumerator series_numerator(const MonomialIdeal& ideal, const EngineOptions& options)
{
    LatticeProfile profile = lattice_profile(ideal, options);
    SeriesNumerator numerator(ideal.arity());
    numerator.add(0, 1);
    for (std::size_t r = 1; r < profile.layers.size(); ++r) {
        for (const auto& [deg, count] : profile.layers[r]) {
            BigInt c;
            mpz_set_ui(c.get_mpz_t(), static_cast<unsigned long>(count));
            numerator.add(deg, r % 2 == 0 ? c : BigInt(-c));
        }
    }
    return numerator;
}

HilbertSequence expand_series(const SeriesNumerator& numerator, Degree b_max)
{
    if (b_max < 0)
        throw PreconditionError("b_max must be non-negative");
    HilbertSequence values(static_cast<std::size_t>(b_max) + 1);
    for (Degree b = 0; b <= b_max; ++b) {
        BigInt sum = 0;
        for (const auto& [d, c] : numerator.coefficients()) {
            if (d > b)
                break;
            sum += c * pascal_F(numerator.arity(), b - d);
        }
        if (sum < 0) {
            throw std::logic_error("series expansion produced a negative coefficient at degree " +
                                   std::to_string(b));
        }
        values[static_cast<std::size_t>(b)] = sum;
    }
    return values;
}

} // namespace hilbert
