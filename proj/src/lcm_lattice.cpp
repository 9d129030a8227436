#include "hilbert/lcm_lattice.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "parallel.hpp"

namespace hilbert {

namespace {

constexpr std::size_t kMaxLatticeGenerators = 62;

void check_cap(const MonomialIdeal& ideal, const EngineOptions& options)
{
    std::size_t cap = std::min(options.lattice_cap, kMaxLatticeGenerators);
    if (ideal.size() > cap) {
        throw ResourceCapError("lcm lattice: " + std::to_string(ideal.size()) + " generators exceed the cap of " +
                               std::to_string(cap));
    }
}

/// Depth-first walk over the subsets of generators[first..] extending a
/// fixed prefix, accumulating the degree of every subset lcm.
class SubsetWalker {
public:
    SubsetWalker(const std::vector<Monomial>& generators, std::size_t arity, LatticeProfile& out)
        : gens_(generators), arity_(arity), out_(out), stack_(generators.size() + 1, std::vector<Exponent>(arity))
    {
    }

    void run(std::uint64_t prefix_mask, std::size_t first)
    {
        auto& base = stack_[0];
        std::fill(base.begin(), base.end(), 0);
        Degree deg = 0;
        std::size_t size = 0;
        for (std::size_t i = 0; i < first; ++i) {
            if ((prefix_mask >> i) & 1U) {
                deg = absorb(base, gens_[i], deg);
                ++size;
            }
        }
        if (size > 0)
            record(size, deg);
        descend(0, first, size, deg);
    }

private:
    Degree absorb(std::vector<Exponent>& current, const Monomial& g, Degree deg) const
    {
        for (std::size_t k = 0; k < arity_; ++k) {
            if (g[k] > current[k]) {
                deg += g[k] - current[k];
                current[k] = g[k];
            }
        }
        return deg;
    }

    void descend(std::size_t depth, std::size_t start, std::size_t size, Degree deg)
    {
        for (std::size_t i = start; i < gens_.size(); ++i) {
            auto& next = stack_[depth + 1];
            next = stack_[depth];
            Degree d = absorb(next, gens_[i], deg);
            record(size + 1, d);
            descend(depth + 1, i + 1, size + 1, d);
        }
    }

    void record(std::size_t size, Degree deg)
    {
        ++out_.layers[size][deg];
        ++out_.subsets_visited;
    }

    const std::vector<Monomial>& gens_;
    std::size_t arity_;
    LatticeProfile& out_;
    std::vector<std::vector<Exponent>> stack_;
};

} // namespace

LcmLattice::LcmLattice(std::size_t arity, std::size_t generator_count, std::vector<std::vector<LatticeEntry>> layers)
    : arity_(arity), generator_count_(generator_count), layers_(std::move(layers))
{
}

const std::vector<LatticeEntry>& LcmLattice::layer(std::size_t r) const
{
    if (r < 1 || r > layers_.size())
        throw std::out_of_range("lcm lattice layer " + std::to_string(r));
    return layers_[r - 1];
}

LcmLattice build_lcm_lattice(const MonomialIdeal& ideal, const EngineOptions& options)
{
    if (ideal.empty())
        throw PreconditionError("lcm lattice of the zero ideal is empty");
    check_cap(ideal, options);
    const std::size_t n = ideal.size();
    std::vector<std::vector<LatticeEntry>> layers(n);
    for (std::size_t r = 1; r <= n; ++r) {
        // lexicographic r-combinations of 0..n-1
        std::vector<std::size_t> combo(r);
        for (std::size_t i = 0; i < r; ++i)
            combo[i] = i;
        for (;;) {
            Monomial m = ideal[combo[0]];
            std::uint64_t mask = std::uint64_t{1} << combo[0];
            for (std::size_t i = 1; i < r; ++i) {
                m = lcm(m, ideal[combo[i]]);
                mask |= std::uint64_t{1} << combo[i];
            }
            Degree d = m.degree();
            layers[r - 1].push_back({std::move(m), d, mask});

            std::size_t i = r;
            while (i-- > 0) {
                if (combo[i] != i + n - r)
                    break;
            }
            if (i == static_cast<std::size_t>(-1))
                break;
            ++combo[i];
            for (std::size_t k = i + 1; k < r; ++k)
                combo[k] = combo[k - 1] + 1;
        }
    }
    return LcmLattice(ideal.arity(), n, std::move(layers));
}

std::vector<CancelledPair> cancel_adjacent_pairs(const LcmLattice& lattice)
{
    std::vector<CancelledPair> pairs;
    const std::size_t n = lattice.layer_count();
    std::vector<std::vector<bool>> cancelled(n);
    for (std::size_t r = 1; r <= n; ++r)
        cancelled[r - 1].assign(lattice.layer(r).size(), false);

    for (std::size_t r = 1; r < n; ++r) {
        const auto& lower = lattice.layer(r);
        const auto& upper = lattice.layer(r + 1);
        auto& lower_done = cancelled[r - 1];
        auto& upper_done = cancelled[r];
        for (bool exact : {true, false}) {
            for (std::size_t u = 0; u < upper.size(); ++u) {
                if (upper_done[u])
                    continue;
                for (std::size_t l = 0; l < lower.size(); ++l) {
                    if (lower_done[l] || lower[l].degree != upper[u].degree)
                        continue;
                    if (exact && lower[l].lcm != upper[u].lcm)
                        continue;
                    lower_done[l] = true;
                    upper_done[u] = true;
                    pairs.push_back({r, upper[u].degree, l, u});
                    break;
                }
            }
        }
    }
    return pairs;
}

LatticeProfile lattice_profile(const MonomialIdeal& ideal, const EngineOptions& options)
{
    check_cap(ideal, options);
    const std::size_t n = ideal.size();
    LatticeProfile profile;
    profile.arity = ideal.arity();
    profile.generator_count = n;
    profile.layers.resize(n + 1);
    if (n == 0)
        return profile;

    // Split on the inclusion pattern of the first few generators; each
    // pattern is an independent task with its own histogram.
    std::size_t split = 0;
    if (options.threads > 1) {
        auto wanted = std::bit_width(static_cast<unsigned>(options.threads) * 4U);
        split = std::min<std::size_t>(n, static_cast<std::size_t>(wanted));
    }
    const std::size_t tasks = std::size_t{1} << split;
    std::vector<LatticeProfile> partial(tasks);
    detail::parallel_for(tasks, options.threads, [&](std::size_t t) {
        auto& local = partial[t];
        local.layers.resize(n + 1);
        SubsetWalker walker(ideal.generators(), ideal.arity(), local);
        walker.run(static_cast<std::uint64_t>(t), split);
    });
    for (const auto& local : partial) {
        for (std::size_t r = 1; r <= n; ++r) {
            for (const auto& [deg, count] : local.layers[r])
                profile.layers[r][deg] += count;
        }
        profile.subsets_visited += local.subsets_visited;
    }
    return profile;
}

std::vector<ProfileCancellation> cancel_profile(LatticeProfile& profile)
{
    std::vector<ProfileCancellation> applied;
    for (std::size_t r = 1; r + 1 < profile.layers.size(); ++r) {
        auto& lower = profile.layers[r];
        auto& upper = profile.layers[r + 1];
        for (auto& [deg, count] : lower) {
            auto it = upper.find(deg);
            if (it == upper.end() || count == 0 || it->second == 0)
                continue;
            std::uint64_t k = std::min(count, it->second);
            count -= k;
            it->second -= k;
            applied.push_back({r, deg, k});
        }
        std::erase_if(lower, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(upper, [](const auto& kv) { return kv.second == 0; });
    }
    return applied;
}

Count evaluate_profile(const LatticeProfile& profile, Degree b)
{
    BigInt in_ideal = 0;
    for (std::size_t r = 1; r < profile.layers.size(); ++r) {
        BigInt layer_sum = 0;
        for (const auto& [deg, count] : profile.layers[r]) {
            BigInt mult;
            mpz_set_ui(mult.get_mpz_t(), static_cast<unsigned long>(count));
            layer_sum += mult * pascal_F(profile.arity, b - deg);
        }
        if (r % 2 == 1)
            in_ideal += layer_sum;
        else
            in_ideal -= layer_sum;
    }
    return pascal_F(profile.arity, b) - in_ideal;
}

HilbertSequence hf_lcm_lattice(const MonomialIdeal& ideal, Degree b_max, bool cancel, const EngineOptions& options,
                               LatticeStats* stats)
{
    if (b_max < 0)
        throw PreconditionError("b_max must be non-negative");
    LatticeProfile profile = lattice_profile(ideal, options);
    std::vector<ProfileCancellation> cancellations;
    if (cancel)
        cancellations = cancel_profile(profile);
    HilbertSequence values(static_cast<std::size_t>(b_max) + 1);
    for (Degree b = 0; b <= b_max; ++b)
        values[static_cast<std::size_t>(b)] = evaluate_profile(profile, b);
    if (stats != nullptr) {
        stats->subsets_visited = profile.subsets_visited;
        stats->cancellations = std::move(cancellations);
    }
    return values;
}

} // namespace hilbert
