#include <map>
#include <vector>

#include "hilbert/hf_engine.hpp"

namespace hilbert {

namespace {

class SyzygyRecursion {
public:
    SyzygyRecursion(std::size_t arity, Degree b_max) : arity_(arity), length_(static_cast<std::size_t>(b_max) + 1) {}

    /// The recursion applied to the generators exactly as listed.
    HilbertSequence evaluate(const std::vector<Monomial>& gens)
    {
        HilbertSequence values(length_);
        for (std::size_t t = 0; t < length_; ++t)
            values[t] = pascal_F(arity_, static_cast<Degree>(t));
        if (gens.empty())
            return values;

        const Degree d1 = gens[0].degree();
        for (std::size_t t = 0; t < length_; ++t)
            values[t] -= pascal_F(arity_, static_cast<Degree>(t) - d1);

        for (std::size_t j = 1; j < gens.size(); ++j) {
            std::vector<Monomial> syzygies;
            syzygies.reserve(j);
            for (std::size_t i = 0; i < j; ++i)
                syzygies.push_back(syzygy_quotient(gens[i], gens[j]));
            const HilbertSequence& sub = evaluate_canonical(canonicalize(MonomialIdeal(arity_, std::move(syzygies))));
            const auto shift = static_cast<std::size_t>(gens[j].degree());
            for (std::size_t t = shift; t < length_; ++t)
                values[t] -= sub[t - shift];
        }
        return values;
    }

    const SyzygyStats& stats() const noexcept { return stats_; }

private:
    const HilbertSequence& evaluate_canonical(const MonomialIdeal& ideal)
    {
        ++stats_.memo_lookups;
        auto it = memo_.find(ideal.generators());
        if (it != memo_.end()) {
            ++stats_.memo_hits;
            return it->second;
        }
        HilbertSequence values = evaluate(ideal.generators());
        auto [pos, inserted] = memo_.emplace(ideal.generators(), std::move(values));
        stats_.memo_entries = memo_.size();
        return pos->second;
    }

    std::size_t arity_;
    std::size_t length_;
    // std::map keeps references stable across insertions.
    std::map<std::vector<Monomial>, HilbertSequence> memo_;
    SyzygyStats stats_;
};

} // namespace

HilbertSequence hf_syzygy(const MonomialIdeal& ideal, Degree b_max, SyzygyStats* stats)
{
    if (b_max < 0)
        throw PreconditionError("b_max must be non-negative");
    SyzygyRecursion recursion(ideal.arity(), b_max);
    HilbertSequence values = recursion.evaluate(ideal.generators());
    if (stats != nullptr)
        *stats = recursion.stats();
    return values;
}

} // namespace hilbert
