#include "diocone/cone.hpp"

#include "diocone/errors.hpp"

#include <set>

namespace diocone {

IntMatrix ingest_generators(const IntMatrix& generators) {
    IntMatrix out;
    std::set<IntVector> seen;
    for (const auto& g : generators) {
        if (is_zero(g)) continue;
        if (seen.insert(g).second) out.push_back(g);
    }
    return out;
}

GradedValue standard_map(const IntVector& x, const std::vector<SupportForm>& forms) {
    GradedValue v;
    v.vector = x;
    v.sigma_values.reserve(forms.size());
    v.tdeg = 0;
    for (const auto& f : forms) {
        if (f.coeffs.size() != x.size())
            throw MathError("DimMismatch", "form and vector dimensions differ");
        Int s = dot(f.coeffs, x);
        v.tdeg += s;
        v.sigma_values.push_back(std::move(s));
    }
    return v;
}

GradedValue standard_map(const IntVector& x, const ConeState& cone) {
    if (x.size() != cone.dim)
        throw MathError("DimMismatch", "vector dimension differs from cone dimension");
    return standard_map(x, cone.support_forms);
}

bool is_pointed(const ConeState& cone) {
    IntMatrix m;
    m.reserve(cone.support_forms.size());
    for (const auto& f : cone.support_forms) m.push_back(f.coeffs);
    return rank(m) == cone.dim;
}

namespace {

bool is_extreme(const IntVector& g, const std::vector<SupportForm>& forms, std::size_t d) {
    IntMatrix vanishing;
    for (const auto& f : forms)
        if (dot(f.coeffs, g) == 0) vanishing.push_back(f.coeffs);
    if (vanishing.size() + 1 < d) return false;
    return rank(vanishing) == d - 1;
}

} // namespace

IntMatrix extreme_rays(const ConeState& cone) {
    IntMatrix rays;
    std::set<IntVector> seen;
    for (std::size_t i = 0; i < cone.generators.size(); ++i) {
        if (!cone.extreme_ray_flags[i]) continue;
        IntVector p = primitive_part(cone.generators[i]);
        if (seen.insert(p).second) rays.push_back(std::move(p));
    }
    return rays;
}

ConeState make_cone_state(IntMatrix generators, std::vector<SupportForm> forms,
                          LatticeEmbedding embedding) {
    ConeState c;
    c.dim = generators.empty() ? embedding.rank : generators[0].size();
    c.generators = std::move(generators);
    c.support_forms = std::move(forms);
    c.embedding = std::move(embedding);
    c.pointed = is_pointed(c);
    c.extreme_ray_flags.resize(c.generators.size());
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        c.extreme_ray_flags[i] = is_extreme(c.generators[i], c.support_forms, c.dim);
    return c;
}

} // namespace diocone
