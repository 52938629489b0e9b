#pragma once

#include "diocone/fourier_motzkin.hpp"
#include "diocone/reduction.hpp"

namespace diocone {

// A lattice point of the semi-open parallelotope of a simplicial cell.
struct ParPoint {
    IntVector vector;
    std::vector<std::size_t> barycentric_support; // cell-local indices with a_i != 0
    std::optional<Int> degree;
};

// The mu(D) residue-class representatives inside par(v_1,...,v_d), including
// the zero vector.  `cell_generators` are the rows the cell indices refer to.
std::vector<ParPoint> enumerate_par_points(const SimplicialCell& cell,
                                           const IntMatrix& cell_generators);

struct HilbertResult {
    IntMatrix hilbert_basis;  // original coordinates, lexicographic order
    IntMatrix support_forms;  // original coordinates
    IntMatrix extreme_rays;   // original coordinates
    Triangulation triangulation; // embedded coordinates (primal only)
    Int total_multiplicity = 0;
    std::size_t dim = 0; // dimension of the cone
    bool pointed = true;
    IntMatrix unit_basis; // nonempty iff the cone is not pointed (dual path)
    LatticeEmbedding embedding;
};

// The primal algorithm: support hyperplanes and placing triangulation by
// incremental Fourier-Motzkin, local generators per simplicial cell, global
// reduction.
HilbertResult primal_hilbert_basis(const IntMatrix& generators, LatticeMode mode);

} // namespace diocone
