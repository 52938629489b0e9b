#pragma once

#include "diocone/primal.hpp"
#include "diocone/reduction.hpp"

namespace diocone {

// Evolving state of the halfspace-cutting algorithm: Hilbert basis modulo
// units plus a lattice basis of the unit group.
struct DualState {
    std::size_t dim = 0;
    std::vector<Candidate> hilbert_basis; // sigma-values cached over inserted_forms
    IntMatrix unit_basis;
    std::vector<SupportForm> inserted_forms;

    static DualState full_lattice(std::size_t dim);
};

struct CutOutcome {
    DualState plus_state;
    IntMatrix minus_basis;         // Hilbert basis of the opposite halfspace
    std::optional<IntVector> h_element; // unit-group generator split off in case (b)
    long generations = 0;          // stabilization count
};

// One halfspace cut: computes the Hilbert basis of M+ (and of M-) together
// with the shrunken unit group, by sum generation and auto-reduction until
// the basis stabilizes.
CutOutcome cut_by_halfspace(const DualState& state, const SupportForm& lambda);

enum class HyperplaneOrder { heuristic, input_order };

// Deterministic insertion order for the halfspaces.  The heuristic greedily
// picks the form with the fewest strictly negative values on the current
// basis and unit vectors.
std::vector<SupportForm> order_hyperplanes(const std::vector<SupportForm>& forms);

// Full dual run: equations are removed by passing to their integer kernel,
// then every inequality is cut in turn.
HilbertResult dual_hilbert_basis(const std::vector<SupportForm>& forms,
                                 const IntMatrix& equations,
                                 HyperplaneOrder order = HyperplaneOrder::heuristic);

} // namespace diocone
