#ifndef HILBERT_TEST_SUPPORT_HPP
#define HILBERT_TEST_SUPPORT_HPP

// Brute-force reference implementations used as test oracles. Nothing here
// calls into the library's counting code: monomials are plain exponent
// vectors and binomials are computed with machine integers.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hilbert/hf_engine.hpp"
#include "hilbert/monomial.hpp"

namespace oracle {

using Exps = std::vector<unsigned>;

struct RawIdeal {
    std::size_t arity = 0;
    std::vector<Exps> gens;
};

/// Every exponent vector of total degree b, built by recursion on the
/// first coordinate.
inline void enumerate(std::size_t arity, unsigned b, const std::function<void(const Exps&)>& fn)
{
    Exps e(arity, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (arity == 0) {
            if (left == 0)
                fn(e);
            return;
        }
        if (i + 1 == arity) {
            e[i] = left;
            fn(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, b);
}

inline bool divides(const Exps& g, const Exps& m)
{
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > m[i])
            return false;
    }
    return true;
}

inline bool in_ideal(const RawIdeal& ideal, const Exps& m)
{
    for (const auto& g : ideal.gens) {
        if (divides(g, m))
            return true;
    }
    return false;
}

inline std::uint64_t hf(const RawIdeal& ideal, unsigned b)
{
    std::uint64_t count = 0;
    enumerate(ideal.arity, b, [&](const Exps& m) {
        if (!in_ideal(ideal, m))
            ++count;
    });
    return count;
}

inline std::vector<std::uint64_t> hf_sequence(const RawIdeal& ideal, unsigned b_max)
{
    std::vector<std::uint64_t> out;
    for (unsigned b = 0; b <= b_max; ++b)
        out.push_back(hf(ideal, b));
    return out;
}

/// Degree-b monomials m of the ideal's ring with m inside the ideal.
inline std::uint64_t ideal_count(const RawIdeal& ideal, unsigned b)
{
    std::uint64_t count = 0;
    enumerate(ideal.arity, b, [&](const Exps& m) {
        if (in_ideal(ideal, m))
            ++count;
    });
    return count;
}

/// dim of (0 : x_last) in degree b: monomials outside the ideal that land
/// inside it after one multiplication by the last variable.
inline std::uint64_t annihilator(const RawIdeal& ideal, unsigned b)
{
    std::uint64_t count = 0;
    enumerate(ideal.arity, b, [&](const Exps& m) {
        if (in_ideal(ideal, m))
            return;
        Exps up = m;
        ++up.back();
        if (in_ideal(ideal, up))
            ++count;
    });
    return count;
}

/// binomial(n, k) in 64 bits; exact for the small arguments used in tests.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Number of degree-b monomials in a variables, by counting.
inline std::uint64_t monomial_count(std::size_t a, unsigned b)
{
    std::uint64_t count = 0;
    enumerate(a, b, [&](const Exps&) { ++count; });
    return count;
}

inline hilbert::MonomialIdeal to_ideal(const RawIdeal& raw)
{
    std::vector<hilbert::Monomial> gens;
    for (const auto& g : raw.gens)
        gens.emplace_back(std::vector<hilbert::Exponent>(g.begin(), g.end()));
    return hilbert::MonomialIdeal(raw.arity, std::move(gens));
}

inline RawIdeal from_ideal(const hilbert::MonomialIdeal& ideal)
{
    RawIdeal raw{ideal.arity(), {}};
    for (const auto& g : ideal.generators())
        raw.gens.emplace_back(g.exponents().begin(), g.exponents().end());
    return raw;
}

/// Arity 1..max_arity, 1..max_gens non-constant generators with exponents
/// in 0..max_exp.
inline RawIdeal random_ideal(std::mt19937_64& rng, std::size_t max_arity, std::size_t max_gens, unsigned max_exp)
{
    RawIdeal raw;
    raw.arity = 1 + rng() % max_arity;
    std::size_t n = 1 + rng() % max_gens;
    while (raw.gens.size() < n) {
        Exps e(raw.arity);
        unsigned total = 0;
        for (auto& x : e) {
            x = static_cast<unsigned>(rng() % (max_exp + 1));
            total += x;
        }
        if (total > 0)
            raw.gens.push_back(std::move(e));
    }
    return raw;
}

inline std::vector<hilbert::Count> counts(const std::vector<std::uint64_t>& v)
{
    std::vector<hilbert::Count> out;
    for (auto x : v)
        out.emplace_back(static_cast<unsigned long>(x));
    return out;
}

inline std::string show(const hilbert::HilbertSequence& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

inline hilbert::HilbertSequence seq(std::initializer_list<long> values)
{
    hilbert::HilbertSequence out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

} // namespace oracle

#endif
