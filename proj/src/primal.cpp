#include "diocone/primal.hpp"

#include "diocone/errors.hpp"

#include <algorithm>
#include <set>

namespace diocone {

std::vector<ParPoint> enumerate_par_points(const SimplicialCell& cell,
                                           const IntMatrix& cell_generators) {
    IntMatrix vc;
    for (std::size_t i : cell.generator_indices) vc.push_back(cell_generators[i]);
    const std::size_t d = vc.size();

    DiagonalForm f = diagonalize(vc);
    if (f.diag.size() != d)
        throw MathError("SingularCell", "cell generators are linearly dependent");
    Adjugate av = adjugate(vc);

    std::vector<unsigned long> radix(d);
    for (std::size_t i = 0; i < d; ++i) radix[i] = f.diag[i].get_ui();

    std::vector<ParPoint> points;
    std::vector<unsigned long> t(d, 0);
    while (true) {
        // representative of the residue class t, then reduced into par()
        IntVector tv(d);
        for (std::size_t i = 0; i < d; ++i) tv[i] = t[i];
        IntVector z = vec_times_matrix(tv, f.v_inv);
        IntVector a_num = vec_times_matrix(z, av.adj);
        ParPoint p;
        for (std::size_t i = 0; i < d; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a_num[i].get_mpz_t(), av.det.get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < d; ++j) z[j] -= q * vc[i][j];
            if (a_num[i] != q * av.det) p.barycentric_support.push_back(i);
        }
        p.vector = std::move(z);
        points.push_back(std::move(p));

        std::size_t k = 0;
        while (k < d && ++t[k] == radix[k]) t[k++] = 0;
        if (k == d) break;
    }
    return points;
}

HilbertResult primal_hilbert_basis(const IntMatrix& generators, LatticeMode mode) {
    IntMatrix gens = ingest_generators(generators);
    if (gens.empty()) throw MathError("ZeroCone", "no nonzero generators");

    FullDimResult full = to_full_dimensional(gens, mode);
    const std::size_t r = full.embedding.rank;

    HullState hull(r, /*with_triangulation=*/true);
    for (const auto& g : full.transformed) hull.insert_generator(g);

    ConeState cone = make_cone_state(full.transformed, hull.support_forms(), full.embedding);
    if (!cone.pointed) throw MathError("NotPointed", "cone contains a nonzero unit");

    HilbertResult res;
    res.dim = r;
    res.pointed = true;
    res.embedding = full.embedding;
    res.triangulation = hull.triangulation();

    std::set<IntVector> candidates;
    for (const auto& cell : res.triangulation.cells) {
        res.total_multiplicity += cell.multiplicity;
        for (std::size_t i : cell.generator_indices) candidates.insert(full.transformed[i]);
        for (auto& p : enumerate_par_points(cell, full.transformed))
            if (!is_zero(p.vector)) candidates.insert(std::move(p.vector));
    }

    std::vector<Candidate> pool;
    pool.reserve(candidates.size());
    for (const auto& v : candidates) pool.push_back({standard_map(v, cone), 0, std::nullopt});
    std::sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
        if (a.value.tdeg != b.value.tdeg) return a.value.tdeg < b.value.tdeg;
        return lex_less(a.value.vector, b.value.vector);
    });

    for (const auto& g : reduce_to_hilbert_basis(pool))
        res.hilbert_basis.push_back(full.embedding.backward(g.vector));
    std::sort(res.hilbert_basis.begin(), res.hilbert_basis.end(), lex_less);

    for (const auto& ray : extreme_rays(cone))
        res.extreme_rays.push_back(full.embedding.backward(ray));
    std::sort(res.extreme_rays.begin(), res.extreme_rays.end(), lex_less);

    for (const auto& f : cone.support_forms)
        res.support_forms.push_back(full.embedding.backward_form(f.coeffs));
    std::sort(res.support_forms.begin(), res.support_forms.end(), lex_less);

    return res;
}

} // namespace diocone
