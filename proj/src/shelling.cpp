#include "diocone/shelling.hpp"

#include "diocone/errors.hpp"

#include <algorithm>
#include <set>

namespace diocone {

std::optional<IntVector> find_grading(const IntMatrix& generators) {
    if (generators.empty()) return std::nullopt;
    IntVector ones(generators.size(), 1);
    return integral_solve(generators, ones);
}

namespace {

bool nonvertical_facets_simplicial(const HullState& hull) {
    const std::size_t last = hull.dim() - 1;
    for (const auto& f : hull.facets())
        if (f.form[last] != 0 && !f.simplicial) return false;
    return true;
}

} // namespace

LiftedCone lift_and_hull(const IntMatrix& rays, const std::vector<Int>* initial_weights) {
    if (rays.empty()) throw MathError("ZeroCone", "no rays to lift");
    const std::size_t r = rays[0].size();
    const std::size_t d1 = r + 1;

    std::vector<Int> weights(rays.size(), 1);
    if (initial_weights)
        for (std::size_t i = 0; i < rays.size() && i < initial_weights->size(); ++i)
            weights[i] = (*initial_weights)[i];
    for (auto& w : weights)
        if (w <= 0) w = 1;

    for (int attempt = 0; attempt < 40; ++attempt) {
        HullState hull(d1);
        IntMatrix lifted;
        bool ok = true;
        for (std::size_t i = 0; i < rays.size() && ok; ++i) {
            Int bump = 1;
            int tries = 0;
            while (true) {
                IntVector v = rays[i];
                v.push_back(weights[i]);
                HullState trial = hull;
                trial.insert_generator(v);
                bool good;
                if (trial.initialized()) {
                    good = nonvertical_facets_simplicial(trial);
                } else {
                    // while collecting the initial simplex the lifted points
                    // must stay independent
                    good = rank(trial.generators()) == trial.generators().size();
                }
                if (good) {
                    hull = std::move(trial);
                    lifted.push_back(std::move(v));
                    break;
                }
                weights[i] += bump;
                bump *= 2;
                if (++tries > 64) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && hull.initialized())
            return {std::move(lifted), std::move(weights), std::move(hull)};
        // degenerate weight choice; perturb and restart
        weights[rays.size() - 1] += attempt + 1;
    }
    throw MathError("LiftingFailed", "could not keep the lifted hull simplicial");
}

std::vector<BottomFacet> bottom_facets(const LiftedCone& lifted) {
    const std::size_t last = lifted.hull.dim() - 1;
    std::vector<BottomFacet> out;
    for (const auto& f : lifted.hull.facets()) {
        if (f.form[last] <= 0) continue;
        BottomFacet b;
        b.support_form = f.form;
        for (std::size_t i = f.incidence.find_first(); i != IndexSet::npos;
             i = f.incidence.find_next(i))
            b.generator_indices.push_back(i);
        out.push_back(std::move(b));
    }
    return out;
}

IntVector default_interior_point(const LiftedCone& lifted) {
    IntVector x(lifted.hull.dim(), 0);
    for (const auto& g : lifted.lifted_generators) x = add(x, g);
    return x;
}

std::vector<BottomFacet> shelling_order(std::vector<BottomFacet> bottom, const IntVector& x) {
    struct Keyed {
        Int value; // sigma_F(x), positive for interior x
        Int last;  // last coordinate of sigma_F, positive
        const BottomFacet* facet;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(bottom.size());
    for (const auto& b : bottom) {
        Int v = dot(b.support_form, x);
        if (v <= 0) throw MathError("NotInterior", "reference point not interior to the hull");
        keyed.push_back({std::move(v), b.support_form.back(), &b});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        // rho_F(x) = sigma_F(x)/last ascending, then rho_F lexicographically
        Int lhs = a.value * b.last, rhs = b.value * a.last;
        if (lhs != rhs) return lhs < rhs;
        for (std::size_t i = 0; i < a.facet->support_form.size(); ++i) {
            Int u = a.facet->support_form[i] * b.last;
            Int w = b.facet->support_form[i] * a.last;
            if (u != w) return u < w;
        }
        return false;
    });
    std::vector<BottomFacet> out;
    out.reserve(keyed.size());
    for (const auto& k : keyed) out.push_back(*k.facet);
    return out;
}

std::vector<ShelledCell> compute_w_sets(const std::vector<SimplicialCell>& ordered_cells) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<ShelledCell> out;
    for (const auto& cell : ordered_cells) {
        ShelledCell sc;
        sc.cell = cell;
        const auto& v = cell.generator_indices;
        for (std::size_t omit = 0; omit < v.size(); ++omit) {
            std::vector<std::size_t> key;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (j != omit) key.push_back(v[j]);
            std::sort(key.begin(), key.end());
            auto it = seen.find(key);
            if (it != seen.end()) {
                // facet already on the boundary of the union; cannot reappear
                sc.w_set.push_back(omit);
                seen.erase(it);
            } else {
                seen.insert(std::move(key));
            }
        }
        out.push_back(std::move(sc));
    }
    return out;
}

HVector h_vector(const std::vector<ShelledCell>& shelled, const IntMatrix& cell_generators,
                 const IntVector& grading) {
    if (grading.empty()) throw MathError("NotHomogeneous", "no grading available");
    const std::size_t d = shelled.empty() ? 0 : shelled[0].cell.generator_indices.size();
    HVector h;
    h.dim = d;
    h.grading = grading;
    h.coefficients.assign(d + 1, 0);
    for (const auto& sc : shelled) {
        for (const auto& p : enumerate_par_points(sc.cell, cell_generators)) {
            Int deg = dot(grading, p.vector);
            std::size_t outside = 0; // |W minus [x]|
            for (std::size_t w : sc.w_set)
                if (std::find(p.barycentric_support.begin(), p.barycentric_support.end(), w) ==
                    p.barycentric_support.end())
                    ++outside;
            Int k = deg + static_cast<long>(outside);
            if (k < 0 || k > static_cast<long>(d))
                throw MathError("BadDegree", "h-vector exponent out of range");
            h.coefficients[k.get_ui()] += 1;
        }
    }
    return h;
}

std::vector<Rat> hilbert_polynomial(const HVector& h) {
    const std::size_t d = h.dim;
    std::vector<Rat> poly(d == 0 ? 1 : d, 0);
    if (d == 0) return poly;
    Int fact = 1;
    for (std::size_t t = 2; t < d; ++t) fact *= t; // (d-1)!
    for (std::size_t i = 0; i < h.coefficients.size(); ++i) {
        if (h.coefficients[i] == 0) continue;
        // C(k + d - 1 - i, d - 1) = prod_{t=0}^{d-2} (k + d - 1 - i - t) / (d-1)!
        std::vector<Rat> term{Rat(1)};
        for (std::size_t t = 0; t + 1 < d; ++t) {
            Int c = Int(d) - 1 - Int(i) - Int(t);
            std::vector<Rat> next(term.size() + 1, 0);
            for (std::size_t j = 0; j < term.size(); ++j) {
                next[j + 1] += term[j];       // * k
                next[j] += term[j] * Rat(c);  // * constant
            }
            term = std::move(next);
        }
        Rat scale = Rat(h.coefficients[i]) / Rat(fact);
        for (std::size_t j = 0; j < term.size() && j < poly.size(); ++j)
            poly[j] += term[j] * scale;
    }
    for (auto& c : poly) c.canonicalize();
    return poly;
}

std::optional<GradedSeries> compute_graded_series(const ConeState& cone) {
    std::optional<IntVector> grading = find_grading(cone.generators);
    if (!grading) return std::nullopt;

    IntMatrix rays = extreme_rays(cone);
    std::vector<SimplicialCell> cells;
    if (rays.size() == cone.dim) {
        std::vector<std::size_t> all(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;
        cells.push_back({all, determinant_abs(rays)});
    } else {
        LiftedCone lifted = lift_and_hull(rays);
        auto ordered = shelling_order(bottom_facets(lifted), default_interior_point(lifted));
        for (const auto& b : ordered) {
            IntMatrix rows;
            for (std::size_t i : b.generator_indices) rows.push_back(rays[i]);
            cells.push_back({b.generator_indices, determinant_abs(rows)});
        }
    }
    auto shelled = compute_w_sets(cells);

    GradedSeries out;
    out.triangulation_cells = cells.size();
    out.h = h_vector(shelled, rays, *grading);
    out.polynomial = hilbert_polynomial(out.h);
    return out;
}

} // namespace diocone
