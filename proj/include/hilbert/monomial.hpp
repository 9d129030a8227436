#ifndef HILBERT_MONOMIAL_HPP
#define HILBERT_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "hilbert/errors.hpp"

namespace hilbert {

using Exponent = std::uint32_t;
/// Degrees and grading indices. Signed so that shifted arguments b - d
/// may go negative.
using Degree = std::int64_t;

/// A monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exponents);
    Monomial(std::initializer_list<Exponent> exponents);

    /// The constant monomial 1 in a ring of the given arity.
    static Monomial one(std::size_t arity);
    /// x_index^power in a ring of the given arity.
    static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

    std::size_t arity() const noexcept { return exponents_.size(); }
    Exponent operator[](std::size_t i) const noexcept { return exponents_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exponents_; }

    Degree degree() const noexcept;
    bool is_one() const noexcept;
    bool is_square_free() const noexcept;
    /// Index of the highest variable with a positive exponent, if any.
    std::ptrdiff_t last_variable() const noexcept;

    /// Exponentwise sum. Throws std::overflow_error if an exponent overflows.
    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exponents_;
};

Degree degree(const Monomial& m) noexcept;
/// True iff u | v.
bool divides(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
/// v / u; requires u | v.
Monomial quotient(const Monomial& v, const Monomial& u);
/// lcm(p_i, p_j) / p_j.
Monomial syzygy_quotient(const Monomial& p_i, const Monomial& p_j);

/// Calls fn(m) for every monomial of the given degree in `arity` variables,
/// in lexicographically decreasing exponent order. Arity 0 yields the
/// constant monomial for degree 0 and nothing otherwise.
void for_each_monomial(std::size_t arity, Degree degree,
                       const std::function<void(const Monomial&)>& fn);

/// A permutation of 0..n-1. Position k holds the original index of the
/// variable introduced k-th.
class VariableOrder {
public:
    VariableOrder() = default;
    explicit VariableOrder(std::vector<std::size_t> permutation);

    static VariableOrder identity(std::size_t arity);

    std::size_t size() const noexcept { return perm_.size(); }
    std::size_t operator[](std::size_t position) const noexcept { return perm_[position]; }
    std::span<const std::size_t> positions() const noexcept { return perm_; }
    /// Position at which the original variable `index` is introduced.
    std::size_t position_of(std::size_t index) const noexcept { return inverse_[index]; }

    /// Re-express m in ordered coordinates: result[k] = m[order[k]].
    Monomial to_ordered(const Monomial& m) const;
    /// Inverse of to_ordered.
    Monomial from_ordered(const Monomial& m) const;

    friend bool operator==(const VariableOrder& a, const VariableOrder& b) { return a.perm_ == b.perm_; }

private:
    std::vector<std::size_t> perm_;
    std::vector<std::size_t> inverse_;
};

/// A monomial ideal presented by an ordered generator list. The list may
/// be empty (zero ideal), contain duplicates, or contain the constant 1
/// (unit ideal). Arity 0 stands for the coefficient field itself.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t arity);
    MonomialIdeal(std::size_t arity, std::vector<Monomial> generators);

    static MonomialIdeal zero(std::size_t arity) { return MonomialIdeal(arity); }
    static MonomialIdeal unit(std::size_t arity);

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<Monomial>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool empty() const noexcept { return generators_.empty(); }
    const Monomial& operator[](std::size_t i) const noexcept { return generators_[i]; }

    bool is_zero() const noexcept { return generators_.empty(); }
    /// True iff some generator is the constant monomial.
    bool is_unit() const noexcept;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t arity_ = 0;
    std::vector<Monomial> generators_;
};

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// Drops every generator divisible by another one. Survivors keep their
/// relative order; exact duplicates collapse onto the earliest copy.
MonomialIdeal minimalize(const MonomialIdeal& ideal);

/// minimalize followed by a lexicographic sort of the generators. Two
/// ideals are equal iff their canonical forms are.
MonomialIdeal canonicalize(const MonomialIdeal& ideal);

/// Generators supported on the first `a` variables of `order`, written in
/// ordered coordinates of arity a.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, const VariableOrder& order, std::size_t a);

/// The ideal written in ordered coordinates (arity unchanged). Doubles as
/// a variable relabelling.
MonomialIdeal to_ordered(const MonomialIdeal& ideal, const VariableOrder& order);

/// Same generators in a ring with `arity` >= ideal.arity() variables.
MonomialIdeal extend_arity(const MonomialIdeal& ideal, std::size_t arity);

/// 1-based stage at which m first lies in k[x_order[0], ..., x_order[a-1]].
/// The constant monomial has stage 1.
std::size_t stage_of(const Monomial& m, const VariableOrder& order);

/// Stable re-ordering of generators so that they are grouped by stage and,
/// within a stage a, sorted by non-decreasing exponent of the stage
/// variable.
MonomialIdeal reindex_for_table(const MonomialIdeal& ideal, const VariableOrder& order);

} // namespace hilbert

#endif
