#pragma once

#include "diocone/linalg.hpp"

namespace diocone {

struct SupportForm {
    enum class Role { support, equation };
    IntVector coeffs; // primitive
    Role role = Role::support;
};

// sigma-values of a monoid element under the current support forms, plus the
// total degree.  Reduction works on these cached values only.
struct GradedValue {
    IntVector vector;
    std::vector<Int> sigma_values;
    Int tdeg;
};

// Immutable description of a full-dimensional cone in working coordinates.
struct ConeState {
    std::size_t dim = 0;
    IntMatrix generators;
    std::vector<SupportForm> support_forms;
    LatticeEmbedding embedding;
    bool pointed = false;
    std::vector<bool> extreme_ray_flags;
};

// Drops zero and duplicate generators, preserving order.  Non-primitive
// generators are kept as given (they matter in generated_lattice mode).
IntMatrix ingest_generators(const IntMatrix& generators);

GradedValue standard_map(const IntVector& x, const ConeState& cone);
GradedValue standard_map(const IntVector& x, const std::vector<SupportForm>& forms);

// Pointed iff the support forms span the full dual space.
bool is_pointed(const ConeState& cone);

// Generators lying on a rank d-1 set of support hyperplanes, as primitive
// vectors (deduplicated).
IntMatrix extreme_rays(const ConeState& cone);

// Builds the state from generators and precomputed support forms; fills the
// pointedness flag and extreme-ray flags.
ConeState make_cone_state(IntMatrix generators, std::vector<SupportForm> forms,
                          LatticeEmbedding embedding);

} // namespace diocone
