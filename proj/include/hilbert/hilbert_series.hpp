#ifndef HILBERT_HILBERT_SERIES_HPP
#define HILBERT_HILBERT_SERIES_HPP

#include <cstddef>
#include <map>

#include "hilbert/engine_options.hpp"
#include "hilbert/monomial.hpp"
#include "hilbert/pascal.hpp"

namespace hilbert {

/// HS(R/I, t) = K(t) / (1 - t)^arity with K a polynomial with integer
/// coefficients. Only nonzero coefficients are stored.
class SeriesNumerator {
public:
    SeriesNumerator() = default;
    explicit SeriesNumerator(std::size_t arity) : arity_(arity) {}
    SeriesNumerator(std::size_t arity, std::map<Degree, BigInt> coefficients);

    std::size_t arity() const noexcept { return arity_; }
    const std::map<Degree, BigInt>& coefficients() const noexcept { return coefficients_; }
    /// Coefficient of t^d (0 when absent).
    BigInt coefficient(Degree d) const;
    bool is_zero() const noexcept { return coefficients_.empty(); }
    /// Highest degree with a nonzero coefficient, or -1 for K = 0.
    Degree degree() const noexcept;
    /// K(1).
    BigInt value_at_one() const;

    void add(Degree d, const BigInt& c);

    friend bool operator==(const SeriesNumerator&, const SeriesNumerator&) = default;

private:
    std::size_t arity_ = 1;
    std::map<Degree, BigInt> coefficients_;
};

/// K(t) = sum over all subsets S of the generators of (-1)^|S| t^deg lcm(S),
/// with lcm of the empty set = 1. Throws ResourceCapError past the lattice
/// cap.
SeriesNumerator series_numerator(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// First b_max + 1 coefficients of K(t) / (1 - t)^a. Throws std::logic_error
/// if a coefficient comes out negative, which no quotient ring can produce.
HilbertSequence expand_series(const SeriesNumerator& numerator, Degree b_max);

} // namespace hilbert

#endif
