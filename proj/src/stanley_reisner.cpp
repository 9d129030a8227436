#include "hilbert/stanley_reisner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

namespace hilbert {

namespace {

using Mask = std::uint32_t;

std::string join(const Face& face)
{
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i > 0)
            out += ",";
        out += face[i];
    }
    return out + "}";
}

std::map<std::string, std::size_t> index_vertices(const SimplicialComplex& complex)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < complex.vertices.size(); ++i)
        index.emplace(complex.vertices[i], i);
    return index;
}

std::vector<Mask> facet_masks(const SimplicialComplex& complex)
{
    auto index = index_vertices(complex);
    std::vector<Mask> masks;
    for (const auto& facet : complex.facets) {
        Mask m = 0;
        for (const auto& v : facet)
            m |= Mask{1} << index.at(v);
        masks.push_back(m);
    }
    return masks;
}

Face face_of(const SimplicialComplex& complex, Mask mask)
{
    Face face;
    for (std::size_t i = 0; i < complex.vertices.size(); ++i) {
        if ((mask >> i) & 1U)
            face.push_back(complex.vertices[i]);
    }
    return face;
}

void require_valid(const SimplicialComplex& complex, std::size_t vertex_cap)
{
    if (complex.vertices.size() > vertex_cap || complex.vertices.size() > 31) {
        throw ResourceCapError("simplicial complex has " + std::to_string(complex.vertices.size()) +
                               " vertices; the cap is " + std::to_string(std::min<std::size_t>(vertex_cap, 31)));
    }
    auto report = validate_complex(complex);
    if (!report.ok())
        throw InvalidComplex(std::move(report));
}

} // namespace

std::string ValidationReport::describe() const
{
    std::ostringstream out;
    for (const auto& v : violations)
        out << v.message << '\n';
    return out.str();
}

InvalidComplex::InvalidComplex(ValidationReport report)
    : std::invalid_argument("invalid simplicial complex:\n" + report.describe()), report_(std::move(report))
{
}

ValidationReport validate_complex(const SimplicialComplex& complex)
{
    ValidationReport report;
    auto add = [&](ViolationKind kind, Face face, std::string message) {
        report.violations.push_back({kind, std::move(face), std::move(message)});
    };

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < complex.vertices.size(); ++i) {
        if (!index.emplace(complex.vertices[i], i).second)
            add(ViolationKind::duplicate_vertex, {complex.vertices[i]},
                "vertex " + complex.vertices[i] + " is listed more than once");
    }

    // Facets as sorted index sets; facets with unknown names are skipped
    // for the containment check.
    std::vector<std::vector<std::size_t>> sets(complex.facets.size());
    std::vector<bool> usable(complex.facets.size(), true);
    std::vector<bool> covered(complex.vertices.size(), false);
    for (std::size_t f = 0; f < complex.facets.size(); ++f) {
        const Face& facet = complex.facets[f];
        for (const auto& name : facet) {
            auto it = index.find(name);
            if (it == index.end()) {
                add(ViolationKind::unknown_vertex, facet, "facet " + join(facet) + " uses unknown vertex " + name);
                usable[f] = false;
                continue;
            }
            sets[f].push_back(it->second);
            covered[it->second] = true;
        }
        std::sort(sets[f].begin(), sets[f].end());
        if (std::adjacent_find(sets[f].begin(), sets[f].end()) != sets[f].end()) {
            add(ViolationKind::repeated_vertex, facet, "facet " + join(facet) + " repeats a vertex");
            sets[f].erase(std::unique(sets[f].begin(), sets[f].end()), sets[f].end());
        }
    }

    for (std::size_t f = 0; f < sets.size(); ++f) {
        if (!usable[f])
            continue;
        for (std::size_t g = 0; g < sets.size(); ++g) {
            if (f == g || !usable[g])
                continue;
            bool inside = std::includes(sets[g].begin(), sets[g].end(), sets[f].begin(), sets[f].end());
            // equal facets are reported once, on the later copy
            if (inside && (sets[f] != sets[g] || g < f)) {
                add(ViolationKind::contained_facet, complex.facets[f],
                    "facet " + join(complex.facets[f]) + " is contained in facet " + join(complex.facets[g]));
                break;
            }
        }
    }

    for (std::size_t i = 0; i < complex.vertices.size(); ++i) {
        if (!covered[i] && index.at(complex.vertices[i]) == i)
            add(ViolationKind::uncovered_vertex, {complex.vertices[i]},
                "vertex " + complex.vertices[i] + " lies in no facet");
    }
    return report;
}

bool is_face(const SimplicialComplex& complex, const Face& face)
{
    auto index = index_vertices(complex);
    Mask m = 0;
    for (const auto& v : face) {
        auto it = index.find(v);
        if (it == index.end())
            throw PreconditionError("is_face: unknown vertex " + v);
        m |= Mask{1} << it->second;
    }
    auto facets = facet_masks(complex);
    return m == 0 || std::any_of(facets.begin(), facets.end(), [&](Mask f) { return (m & ~f) == 0; });
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex, std::size_t vertex_cap)
{
    require_valid(complex, vertex_cap);
    const std::size_t n = complex.vertices.size();
    const auto facets = facet_masks(complex);
    std::size_t largest_facet = 0;
    for (Mask f : facets)
        largest_facet = std::max<std::size_t>(largest_facet, static_cast<std::size_t>(std::popcount(f)));

    // Every proper subset of a minimal non-face is a face, so none is larger
    // than the largest facet plus one.
    const std::size_t max_size = std::min(n, largest_facet + 1);
    std::vector<Mask> found;
    std::vector<Face> result;
    for (std::size_t k = 1; k <= max_size; ++k) {
        std::vector<std::size_t> combo(k);
        for (std::size_t i = 0; i < k; ++i)
            combo[i] = i;
        for (;;) {
            Mask m = 0;
            for (auto i : combo)
                m |= Mask{1} << i;
            bool superset_of_known = std::any_of(found.begin(), found.end(), [&](Mask g) { return (g & ~m) == 0; });
            bool face = std::any_of(facets.begin(), facets.end(), [&](Mask f) { return (m & ~f) == 0; });
            // A non-face containing no smaller known non-face has all of its
            // proper subsets as faces.
            if (!superset_of_known && !face) {
                found.push_back(m);
                result.push_back(face_of(complex, m));
            }

            std::size_t i = k;
            while (i-- > 0) {
                if (combo[i] != i + n - k)
                    break;
            }
            if (i == static_cast<std::size_t>(-1))
                break;
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j)
                combo[j] = combo[j - 1] + 1;
        }
    }
    return result;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, std::size_t vertex_cap)
{
    auto nonfaces = minimal_nonfaces(complex, vertex_cap);
    auto index = index_vertices(complex);
    const std::size_t n = complex.vertices.size();
    std::vector<Monomial> gens;
    gens.reserve(nonfaces.size());
    for (const auto& nf : nonfaces) {
        std::vector<Exponent> e(n, 0);
        for (const auto& v : nf)
            e[index.at(v)] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

} // namespace hilbert
