#pragma once

#include "diocone/ints.hpp"

#include <optional>

namespace diocone {

// v divided by the gcd of its entries, keeping the direction.
IntVector primitive_part(const IntVector& v);

// Rank over Q, fraction-free elimination.
std::size_t rank(const IntMatrix& a);

// |det A| for square A.
Int determinant_abs(const IntMatrix& a);

// Signed determinant.
Int determinant(const IntMatrix& a);

// adj(A) with A*adj(A) = det(A)*I.  Returns {adjugate, det}.
struct Adjugate {
    IntMatrix adj;
    Int det;
};
Adjugate adjugate(const IntMatrix& a);

// Lattice basis of {x in Z^n : A x = 0}.  The basis spans the full integer
// kernel, not a finite-index sublattice.
IntMatrix integer_kernel_basis(const IntMatrix& a);

// Integral solution of A x = b, if one exists.
std::optional<IntVector> integral_solve(const IntMatrix& a, const IntVector& b);

// Diagonalization U * A * V = diag(d_1,...,d_r) with U, V unimodular and
// d_i > 0.  The divisibility chain of Smith normal form is not enforced;
// any exact diagonal form serves residue enumeration and lattice inversion.
struct DiagonalForm {
    std::vector<Int> diag; // r = rank entries, all positive
    IntMatrix u;           // m x m
    IntMatrix v;           // n x n
    IntMatrix v_inv;       // inverse of v
};
DiagonalForm diagonalize(const IntMatrix& a);

enum class LatticeMode { ambient_lattice, generated_lattice };

// Coordinates on a working lattice L of rank r inside Z^d.  forward maps a
// lattice member x to its coordinate row (x * forward_num) / denom; backward
// maps coordinate rows to original ambient vectors.
struct LatticeEmbedding {
    std::size_t ambient_dim = 0;
    std::size_t rank = 0;
    LatticeMode mode = LatticeMode::ambient_lattice;
    IntMatrix basis;       // rank x d, rows = lattice basis
    IntMatrix forward_num; // d x rank
    Int denom = 1;

    IntVector forward(const IntVector& x) const;  // throws if x not in L
    IntVector backward(const IntVector& c) const; // c * basis
    // Pulls a linear form on the coordinate space back to ambient coordinates
    // (primitive representative).
    IntVector backward_form(const IntVector& form) const;
};

// Builds the embedding for the lattice spanned by the given basis rows
// (rows must be Z-linearly independent).
LatticeEmbedding embedding_from_basis(const IntMatrix& basis, std::size_t ambient_dim,
                                      LatticeMode mode);

// Reduces a generating set to the full-dimensional case.  In ambient mode the
// working lattice is Z^d intersected with the linear span of the generators;
// in generated mode it is the lattice generated by them.
struct FullDimResult {
    LatticeEmbedding embedding;
    IntMatrix transformed; // generators in lattice coordinates
};
FullDimResult to_full_dimensional(const IntMatrix& generators, LatticeMode mode);

} // namespace diocone
