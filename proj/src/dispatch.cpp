#include "hilbert/hf_engine.hpp"

namespace hilbert {

std::string_view to_string(MethodKind method) noexcept
{
    switch (method) {
    case MethodKind::oracle:
        return "oracle";
    case MethodKind::lcm_lattice:
        return "lcm";
    case MethodKind::syzygy:
        return "syzygy";
    case MethodKind::table:
        return "table";
    case MethodKind::automatic:
        return "auto";
    }
    return "auto";
}

std::optional<MethodKind> method_from_string(std::string_view name) noexcept
{
    for (auto m : {MethodKind::oracle, MethodKind::lcm_lattice, MethodKind::syzygy, MethodKind::table,
                   MethodKind::automatic}) {
        if (to_string(m) == name)
            return m;
    }
    return std::nullopt;
}

namespace {

HilbertSequence closed_form(const MonomialIdeal& minimal, std::size_t length)
{
    const std::size_t a = minimal.arity();
    HilbertSequence values(length);
    for (std::size_t i = 0; i < length; ++i) {
        const auto b = static_cast<Degree>(i);
        switch (minimal.size()) {
        case 0:
            values[i] = pascal_F(a, b);
            break;
        case 1:
            values[i] = hf_principal(a, minimal[0].degree(), b);
            break;
        default:
            values[i] = hf_two_generators(a, minimal[0].degree(), minimal[1].degree(),
                                          lcm(minimal[0], minimal[1]).degree(), b);
            break;
        }
    }
    return values;
}

HilbertSequence automatic(const MonomialIdeal& ideal, Degree b_max, const EngineOptions& options)
{
    const auto length = static_cast<std::size_t>(b_max) + 1;
    MonomialIdeal minimal = minimalize(ideal);
    if (minimal.is_unit())
        return HilbertSequence(length, Count(0));
    if (minimal.size() <= 2)
        return closed_form(minimal, length);
    if (minimal.size() <= options.lattice_cap)
        return hf_lcm_lattice(minimal, b_max, false, options);
    return hf_syzygy(minimal, b_max);
}

} // namespace

HilbertSequence hf(const MonomialIdeal& ideal, Degree b_max, MethodKind method, const EngineOptions& options)
{
    if (b_max < 0)
        throw PreconditionError("b_max must be non-negative");
    const auto length = static_cast<std::size_t>(b_max) + 1;
    if (ideal.arity() == 0) {
        // The coefficient field: every generator is the constant 1.
        HilbertSequence values(length, Count(0));
        values[0] = ideal.empty() ? 1 : 0;
        return values;
    }
    switch (method) {
    case MethodKind::oracle:
        return hf_oracle_sequence(ideal, b_max, options);
    case MethodKind::lcm_lattice:
        return hf_lcm_lattice(ideal, b_max, false, options);
    case MethodKind::syzygy:
        return hf_syzygy(ideal, b_max);
    case MethodKind::table:
        return hf_table(ideal, VariableOrder::identity(ideal.arity()), ideal.arity(), b_max, options)
            .row(ideal.arity());
    case MethodKind::automatic:
        break;
    }
    return automatic(ideal, b_max, options);
}

} // namespace hilbert
