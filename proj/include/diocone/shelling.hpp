#pragma once

#include "diocone/primal.hpp"

namespace diocone {

// Integral linear form taking value 1 on every generator, if one exists.
std::optional<IntVector> find_grading(const IntMatrix& generators);

struct LiftedCone {
    IntMatrix lifted_generators; // (v_i, w_i), one row per input ray
    std::vector<Int> weights;
    HullState hull; // hull of the lifted cone; bottom and top facets simplicial
};

struct BottomFacet {
    IntVector support_form; // positive last coordinate
    std::vector<std::size_t> generator_indices;
};

// Lifts the extreme rays by positive weights, keeping the non-vertical facets
// simplicial by bumping weights, and computes the hull.  Requires more rays
// than the dimension; the simplicial case needs no lifting.
LiftedCone lift_and_hull(const IntMatrix& rays, const std::vector<Int>* initial_weights = nullptr);

std::vector<BottomFacet> bottom_facets(const LiftedCone& lifted);

// Sum of the lifted generators; interior for a pointed full-dimensional cone.
IntVector default_interior_point(const LiftedCone& lifted);

// Line-shelling order: ascending ray transition time, exact rational
// comparison, lexicographic tie-break on the normalized forms.
std::vector<BottomFacet> shelling_order(std::vector<BottomFacet> bottom, const IntVector& x);

struct ShelledCell {
    SimplicialCell cell;
    std::vector<std::size_t> w_set; // cell-local positions of opposite vertices
};

// Walks the cells in shelling order, maintaining the seen-facet set; facets
// met a second time are dropped, first sightings are kept.
std::vector<ShelledCell> compute_w_sets(const std::vector<SimplicialCell>& ordered_cells);

struct HVector {
    std::vector<Int> coefficients; // h_0 .. h_d
    std::size_t dim = 0;
    IntVector grading;
};

// Counts every parallelotope point of every shelled cell in degree
// |W minus [x]| + deg x.
HVector h_vector(const std::vector<ShelledCell>& shelled, const IntMatrix& cell_generators,
                 const IntVector& grading);

// P(k) = sum_i h_i * C(k - i + d - 1, d - 1); coefficients by power of k.
std::vector<Rat> hilbert_polynomial(const HVector& h);

// Full pipeline on an embedded pointed cone; nullopt when no grading exists.
struct GradedSeries {
    HVector h;
    std::vector<Rat> polynomial;
    std::size_t triangulation_cells = 0;
};
std::optional<GradedSeries> compute_graded_series(const ConeState& cone);

} // namespace diocone
