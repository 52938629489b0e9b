#pragma once

#include "diocone/cone.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace diocone {

using IndexSet = boost::dynamic_bitset<>;

struct FacetRecord {
    IntVector form; // primitive, nonnegative on all current generators
    IndexSet incidence; // generators the form vanishes on
    bool simplicial = false; // |F cap E| == d-1
};

struct SimplicialCell {
    std::vector<std::size_t> generator_indices; // d indices, linearly independent
    Int multiplicity; // |det| of the generator rows
};

struct Triangulation {
    enum class OrderKind { lexicographic, shelling };
    std::vector<SimplicialCell> cells;
    OrderKind order_kind = OrderKind::lexicographic;
};

// One raw elimination step: partition of the current forms against x_new and
// the combined candidate forms of the positive/negative pairing.
struct RawFmStep {
    std::vector<std::size_t> positive, negative, zero;
    std::vector<IntVector> combined;    // primitive P x N combinations
    std::vector<IntVector> support_set; // P, Z and combined forms together
};
RawFmStep raw_fm_step(const std::vector<FacetRecord>& facets, const IntVector& x_new);

// Incremental hull with the simplicial refinement.  Generators are inserted
// one at a time; the facet list is maintained together with incidence data
// and, optionally, the placing triangulation.
class HullState {
public:
    explicit HullState(std::size_t dim, bool with_triangulation = false,
                       long nonsimplicial_rule_threshold = -1);

    void insert_generator(const IntVector& x_new);

    // True once d linearly independent generators have been seen.
    bool initialized() const { return initialized_; }

    const IntMatrix& generators() const { return gens_; }
    const std::vector<FacetRecord>& facets() const { return facets_; }
    const Triangulation& triangulation() const { return tri_; }
    std::size_t dim() const { return dim_; }

    std::vector<SupportForm> support_forms() const;

private:
    void build_initial_simplex();
    void insert_full(std::size_t gi);
    FacetRecord make_facet(IntVector form) const;

    std::size_t dim_;
    bool with_triangulation_;
    long rule_threshold_; // nonsimplicial-count bound selecting the pairing rule
    bool initialized_ = false;
    IntMatrix gens_;
    IndexSet members_; // generators already part of the hull
    std::vector<std::size_t> pending_;
    std::vector<FacetRecord> facets_;
    Triangulation tri_;
};

// Irredundant primitive support forms of the full-dimensional cone spanned by
// the generators, sorted lexicographically.
std::vector<SupportForm> dual_cone(const IntMatrix& generators);

} // namespace diocone
