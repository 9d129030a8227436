#include <string>

#include "hilbert/hf_engine.hpp"
#include "parallel.hpp"

namespace hilbert {

namespace {

void check_enumeration_cap(std::size_t arity, Degree b, const EngineOptions& options)
{
    Count size = pascal_F(arity, b);
    if (size > Count(std::to_string(options.enumeration_cap))) {
        throw ResourceCapError("oracle: " + size.get_str() + " monomials of degree " + std::to_string(b) +
                               " exceed the enumeration cap of " + std::to_string(options.enumeration_cap));
    }
}

Count count_outside(const MonomialIdeal& ideal, Degree b)
{
    std::uint64_t outside = 0;
    for_each_monomial(ideal.arity(), b, [&](const Monomial& m) {
        if (!contains_monomial(ideal, m))
            ++outside;
    });
    Count result;
    mpz_set_ui(result.get_mpz_t(), static_cast<unsigned long>(outside));
    return result;
}

} // namespace

Count hf_oracle(const MonomialIdeal& ideal, Degree b, const EngineOptions& options)
{
    if (b < 0)
        return 0;
    check_enumeration_cap(ideal.arity(), b, options);
    return count_outside(ideal, b);
}

HilbertSequence hf_oracle_sequence(const MonomialIdeal& ideal, Degree b_max, const EngineOptions& options)
{
    if (b_max < 0)
        throw PreconditionError("b_max must be non-negative");
    // pascal_F is increasing in b, so checking the top degree covers all.
    check_enumeration_cap(ideal.arity(), b_max, options);
    HilbertSequence values(static_cast<std::size_t>(b_max) + 1);
    detail::parallel_for(values.size(), options.threads,
                         [&](std::size_t b) { values[b] = count_outside(ideal, static_cast<Degree>(b)); });
    return values;
}

} // namespace hilbert
