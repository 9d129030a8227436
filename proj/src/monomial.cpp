#include "hilbert/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hilbert {

namespace {

void require_same_arity(const Monomial& u, const Monomial& v, const char* what)
{
    if (u.arity() != v.arity()) {
        throw ArityMismatch(std::string(what) + ": arity " + std::to_string(u.arity()) + " vs " +
                            std::to_string(v.arity()));
    }
}

} // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

Monomial Monomial::one(std::size_t arity)
{
    return Monomial(std::vector<Exponent>(arity, 0));
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power)
{
    if (index >= arity) {
        throw PreconditionError("variable index " + std::to_string(index) + " out of range for arity " +
                                std::to_string(arity));
    }
    std::vector<Exponent> e(arity, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

Degree Monomial::degree() const noexcept
{
    return std::accumulate(exponents_.begin(), exponents_.end(), Degree{0});
}

bool Monomial::is_one() const noexcept
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_square_free() const noexcept
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

std::ptrdiff_t Monomial::last_variable() const noexcept
{
    for (std::size_t i = exponents_.size(); i-- > 0;) {
        if (exponents_[i] != 0)
            return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    require_same_arity(*this, other, "multiply");
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (exponents_[i] > std::numeric_limits<Exponent>::max() - other.exponents_[i])
            throw std::overflow_error("monomial exponent overflow");
        e[i] = exponents_[i] + other.exponents_[i];
    }
    return Monomial(std::move(e));
}

Degree degree(const Monomial& m) noexcept
{
    return m.degree();
}

bool divides(const Monomial& u, const Monomial& v)
{
    require_same_arity(u, v, "divides");
    for (std::size_t i = 0; i < u.arity(); ++i) {
        if (u[i] > v[i])
            return false;
    }
    return true;
}

Monomial lcm(const Monomial& u, const Monomial& v)
{
    require_same_arity(u, v, "lcm");
    std::vector<Exponent> e(u.arity());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(u[i], v[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v)
{
    require_same_arity(u, v, "gcd");
    std::vector<Exponent> e(u.arity());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(u[i], v[i]);
    return Monomial(std::move(e));
}

Monomial quotient(const Monomial& v, const Monomial& u)
{
    require_same_arity(u, v, "quotient");
    std::vector<Exponent> e(u.arity());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (u[i] > v[i])
            throw PreconditionError("quotient: divisor does not divide dividend");
        e[i] = v[i] - u[i];
    }
    return Monomial(std::move(e));
}

Monomial syzygy_quotient(const Monomial& p_i, const Monomial& p_j)
{
    require_same_arity(p_i, p_j, "syzygy_quotient");
    std::vector<Exponent> e(p_i.arity());
    // max(a, b) - b
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = p_i[k] > p_j[k] ? p_i[k] - p_j[k] : 0;
    return Monomial(std::move(e));
}

void for_each_monomial(std::size_t arity, Degree degree, const std::function<void(const Monomial&)>& fn)
{
    if (degree < 0)
        return;
    if (arity == 0) {
        if (degree == 0)
            fn(Monomial());
        return;
    }
    // Odometer over compositions of `degree` into `arity` parts, starting at
    // x_1^degree. The last slot always holds the remainder.
    std::vector<Exponent> e(arity, 0);
    e[0] = static_cast<Exponent>(degree);
    for (;;) {
        fn(Monomial(e));
        if (arity == 1)
            return;
        // find the rightmost non-last position with a positive entry
        std::size_t i = arity - 1;
        while (i-- > 0) {
            if (e[i] != 0)
                break;
        }
        if (i == static_cast<std::size_t>(-1))
            return;
        Exponent rest = e[arity - 1];
        e[arity - 1] = 0;
        --e[i];
        e[i + 1] = rest + 1;
    }
}

VariableOrder::VariableOrder(std::vector<std::size_t> permutation) : perm_(std::move(permutation))
{
    inverse_.assign(perm_.size(), perm_.size());
    for (std::size_t k = 0; k < perm_.size(); ++k) {
        if (perm_[k] >= perm_.size() || inverse_[perm_[k]] != perm_.size())
            throw PreconditionError("variable order is not a permutation");
        inverse_[perm_[k]] = k;
    }
}

VariableOrder VariableOrder::identity(std::size_t arity)
{
    std::vector<std::size_t> p(arity);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return VariableOrder(std::move(p));
}

Monomial VariableOrder::to_ordered(const Monomial& m) const
{
    if (m.arity() != perm_.size())
        throw ArityMismatch("variable order arity differs from monomial arity");
    std::vector<Exponent> e(perm_.size());
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = m[perm_[k]];
    return Monomial(std::move(e));
}

Monomial VariableOrder::from_ordered(const Monomial& m) const
{
    if (m.arity() != perm_.size())
        throw ArityMismatch("variable order arity differs from monomial arity");
    std::vector<Exponent> e(perm_.size());
    for (std::size_t k = 0; k < e.size(); ++k)
        e[perm_[k]] = m[k];
    return Monomial(std::move(e));
}

MonomialIdeal::MonomialIdeal(std::size_t arity) : arity_(arity) {}

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<Monomial> generators)
    : arity_(arity), generators_(std::move(generators))
{
    for (const auto& g : generators_) {
        if (g.arity() != arity_)
            throw ArityMismatch("generator arity " + std::to_string(g.arity()) + " differs from ring arity " +
                                std::to_string(arity_));
    }
}

MonomialIdeal MonomialIdeal::unit(std::size_t arity)
{
    return MonomialIdeal(arity, {Monomial::one(arity)});
}

bool MonomialIdeal::is_unit() const noexcept
{
    return std::any_of(generators_.begin(), generators_.end(), [](const Monomial& g) { return g.is_one(); });
}

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m)
{
    if (m.arity() != ideal.arity())
        throw ArityMismatch("contains_monomial: monomial arity differs from ideal arity");
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal minimalize(const MonomialIdeal& ideal)
{
    const auto& gens = ideal.generators();
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j || !divides(gens[j], gens[i]))
                continue;
            // a strictly smaller divisor, or an equal copy listed earlier
            redundant = gens[j] != gens[i] || j < i;
        }
        if (!redundant)
            kept.push_back(gens[i]);
    }
    return MonomialIdeal(ideal.arity(), std::move(kept));
}

MonomialIdeal canonicalize(const MonomialIdeal& ideal)
{
    auto gens = minimalize(ideal).generators();
    std::sort(gens.begin(), gens.end());
    return MonomialIdeal(ideal.arity(), std::move(gens));
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, const VariableOrder& order, std::size_t a)
{
    if (order.size() != ideal.arity())
        throw ArityMismatch("restrict_to: variable order arity differs from ideal arity");
    if (a < 1 || a > ideal.arity())
        throw PreconditionError("restrict_to: stage " + std::to_string(a) + " outside 1.." +
                                std::to_string(ideal.arity()));
    std::vector<Monomial> kept;
    for (const auto& g : ideal.generators()) {
        auto ordered = order.to_ordered(g);
        auto exps = ordered.exponents();
        if (std::all_of(exps.begin() + static_cast<std::ptrdiff_t>(a), exps.end(),
                        [](Exponent e) { return e == 0; })) {
            kept.emplace_back(std::vector<Exponent>(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(a)));
        }
    }
    return MonomialIdeal(a, std::move(kept));
}

MonomialIdeal to_ordered(const MonomialIdeal& ideal, const VariableOrder& order)
{
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators())
        gens.push_back(order.to_ordered(g));
    return MonomialIdeal(ideal.arity(), std::move(gens));
}

MonomialIdeal extend_arity(const MonomialIdeal& ideal, std::size_t arity)
{
    if (arity < ideal.arity())
        throw PreconditionError("extend_arity cannot shrink a ring");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators()) {
        std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
        e.resize(arity, 0);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(arity, std::move(gens));
}

std::size_t stage_of(const Monomial& m, const VariableOrder& order)
{
    auto last = order.to_ordered(m).last_variable();
    return last < 0 ? 1 : static_cast<std::size_t>(last) + 1;
}

MonomialIdeal reindex_for_table(const MonomialIdeal& ideal, const VariableOrder& order)
{
    if (order.size() != ideal.arity())
        throw ArityMismatch("reindex_for_table: variable order arity differs from ideal arity");
    struct Keyed {
        std::size_t stage;
        Exponent stage_exponent;
        const Monomial* generator;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(ideal.size());
    for (const auto& g : ideal.generators()) {
        std::size_t s = stage_of(g, order);
        keyed.push_back({s, g[order[s - 1]], &g});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& l, const Keyed& r) {
        return l.stage != r.stage ? l.stage < r.stage : l.stage_exponent < r.stage_exponent;
    });
    std::vector<Monomial> gens;
    gens.reserve(keyed.size());
    for (const auto& k : keyed)
        gens.push_back(*k.generator);
    return MonomialIdeal(ideal.arity(), std::move(gens));
}

} // namespace hilbert
