#include <algorithm>
#include <cassert>
#include <string>

#include "hilbert/hf_engine.hpp"

namespace hilbert {

namespace {

std::vector<Exponent> leading(const Monomial& m, std::size_t count)
{
    auto e = m.exponents();
    return {e.begin(), e.begin() + static_cast<std::ptrdiff_t>(count)};
}

MonomialIdeal row_ideal(const MonomialIdeal& reindexed, const VariableOrder& order, std::size_t a)
{
    if (a <= reindexed.arity())
        return restrict_to(reindexed, order, a);
    return extend_arity(to_ordered(reindexed, order), a);
}

} // namespace

AnnihilatorDecomposition annihilator_decomposition(const MonomialIdeal& ideal, const VariableOrder& order,
                                                   std::size_t a)
{
    if (order.size() != ideal.arity())
        throw ArityMismatch("annihilator_decomposition: variable order arity differs from ideal arity");
    if (a < 1)
        throw PreconditionError("annihilator_decomposition: stages are numbered from 1");
    if (ideal.is_unit())
        throw PreconditionError("annihilator_decomposition: the unit ideal has no annihilator decomposition");

    AnnihilatorDecomposition result;
    result.stage = a;
    result.ring_arity = a - 1;

    const MonomialIdeal ordered = to_ordered(ideal, order);
    const auto& p = ordered.generators();
    std::vector<std::size_t> stage(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        stage[j] = static_cast<std::size_t>(p[j].last_variable()) + 1;
        if (j > 0 && stage[j] < stage[j - 1]) {
            throw PreconditionError("annihilator_decomposition: generators are not grouped by stage (generator " +
                                    std::to_string(j + 1) + ")");
        }
    }
    if (a > ideal.arity())
        return result;

    const std::size_t xa = a - 1;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (stage[j] != a)
            continue;
        const Degree shift = p[j].degree() - 1;
        if (j == 0) {
            result.delta = 1;
            result.delta_shift = shift;
            continue;
        }
        std::vector<Monomial> syzygies;
        syzygies.reserve(j);
        for (std::size_t i = 0; i < j; ++i) {
            Monomial m = syzygy_quotient(p[i], p[j]);
            if (m[xa] != 0) {
                throw PreconditionError("annihilator_decomposition: syzygy m_" + std::to_string(i + 1) +
                                        std::to_string(j + 1) + " involves the stage variable; re-index first");
            }
#ifndef NDEBUG
            if (stage[i] == a) {
                // lcm(q_i, q_j)/q_j must agree with lcm(p_i, p_j)/p_j
                Monomial x = Monomial::variable(p[i].arity(), xa);
                assert(syzygy_quotient(quotient(p[i], x), quotient(p[j], x)) == m);
            }
#endif
            syzygies.emplace_back(leading(m, xa));
        }
        MonomialIdeal raw(xa, std::move(syzygies));
        MonomialIdeal minimal = minimalize(raw);
        result.terms.push_back({j, std::move(raw), std::move(minimal), shift});
    }
    return result;
}

HilbertSequence annihilator_hf(const AnnihilatorDecomposition& decomposition, Degree b_max,
                               const EngineOptions& options)
{
    if (b_max < 0)
        throw PreconditionError("b_max must be non-negative");
    const auto length = static_cast<std::size_t>(b_max) + 1;
    HilbertSequence values(length, Count(0));
    if (decomposition.delta != 0) {
        for (std::size_t b = 0; b < length; ++b)
            values[b] += pascal_F(decomposition.ring_arity, static_cast<Degree>(b) - decomposition.delta_shift);
    }
    for (const auto& term : decomposition.terms) {
        if (term.shift > b_max)
            continue;
        HilbertSequence sub = hf(term.ideal, b_max - term.shift, MethodKind::automatic, options);
        for (std::size_t k = 0; k < sub.size(); ++k)
            values[k + static_cast<std::size_t>(term.shift)] += sub[k];
    }
    return values;
}

const HilbertSequence& HilbertTable::row(std::size_t a) const
{
    if (a < 1 || a > rows.size())
        throw std::out_of_range("hilbert table row " + std::to_string(a));
    return rows[a - 1].values;
}

HilbertTable hf_table(const MonomialIdeal& ideal, const VariableOrder& order, std::size_t a_max, Degree b_max,
                      const EngineOptions& options)
{
    if (order.size() != ideal.arity())
        throw ArityMismatch("hf_table: variable order arity differs from ideal arity");
    if (a_max < 1)
        throw PreconditionError("hf_table: a_max must be at least 1");
    if (b_max < 0)
        throw PreconditionError("b_max must be non-negative");

    const auto length = static_cast<std::size_t>(b_max) + 1;
    HilbertTable table;
    table.order = order;
    table.generators = reindex_for_table(ideal, order);
    table.rows.reserve(a_max);
    const bool unit = ideal.is_unit();

    for (std::size_t a = 1; a <= a_max; ++a) {
        HilbertRow row;
        row.a = a;
        row.ideal = row_ideal(table.generators, order, a);
        if (unit) {
            // 1 lies in I_1 already, so every row is the zero module.
            row.annihilator.stage = a;
            row.annihilator.ring_arity = a - 1;
            row.annihilator_values.assign(length, Count(0));
            row.values.assign(length, Count(0));
            table.rows.push_back(std::move(row));
            continue;
        }
        row.annihilator = annihilator_decomposition(table.generators, order, a);
        row.annihilator_values = annihilator_hf(row.annihilator, b_max, options);
        row.values.resize(length);
        if (a == 1) {
            // k[x_1]/<x_1^e>: 1 below the smallest pure power, 0 from there on.
            std::optional<Exponent> smallest;
            for (const auto& g : row.ideal.generators())
                smallest = std::min(smallest.value_or(g[0]), g[0]);
            for (std::size_t b = 0; b < length; ++b)
                row.values[b] = (!smallest || b < *smallest) ? 1 : 0;
        } else {
            const auto& previous = table.rows.back().values;
            for (std::size_t b = 0; b < length; ++b) {
                row.values[b] = previous[b];
                if (b > 0)
                    row.values[b] += row.values[b - 1] - row.annihilator_values[b - 1];
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace hilbert
