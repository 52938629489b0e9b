#include "diocone/fourier_motzkin.hpp"

#include "diocone/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace diocone {

RawFmStep raw_fm_step(const std::vector<FacetRecord>& facets, const IntVector& x_new) {
    RawFmStep step;
    std::vector<Int> vals(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        vals[i] = dot(facets[i].form, x_new);
        int s = sgn(vals[i]);
        if (s > 0)
            step.positive.push_back(i);
        else if (s < 0)
            step.negative.push_back(i);
        else
            step.zero.push_back(i);
    }
    for (std::size_t p : step.positive)
        for (std::size_t n : step.negative)
            step.combined.push_back(
                primitive_part(combine(vals[p], facets[n].form, vals[n], facets[p].form)));
    for (std::size_t p : step.positive) step.support_set.push_back(facets[p].form);
    for (std::size_t z : step.zero) step.support_set.push_back(facets[z].form);
    for (const auto& c : step.combined) step.support_set.push_back(c);
    return step;
}

HullState::HullState(std::size_t dim, bool with_triangulation, long nonsimplicial_rule_threshold)
    : dim_(dim),
      with_triangulation_(with_triangulation),
      rule_threshold_(nonsimplicial_rule_threshold >= 0
                          ? nonsimplicial_rule_threshold
                          : static_cast<long>(dim) * static_cast<long>(dim) *
                                static_cast<long>(dim)) {}

FacetRecord HullState::make_facet(IntVector form) const {
    FacetRecord f;
    f.form = std::move(form);
    f.incidence.resize(gens_.size());
    // only generators already part of the hull count; during the pending
    // phase gens_ runs ahead of the inserted set
    for (std::size_t i = members_.find_first(); i != IndexSet::npos; i = members_.find_next(i))
        if (dot(f.form, gens_[i]) == 0) f.incidence.set(i);
    f.simplicial = f.incidence.count() + 1 == dim_;
    return f;
}

std::vector<SupportForm> HullState::support_forms() const {
    std::vector<SupportForm> forms;
    forms.reserve(facets_.size());
    for (const auto& f : facets_) forms.push_back({f.form, SupportForm::Role::support});
    return forms;
}

void HullState::insert_generator(const IntVector& x_new) {
    if (x_new.size() != dim_) throw MathError("DimMismatch", "generator has wrong dimension");
    for (const auto& g : gens_)
        if (g == x_new) return; // duplicate, state unchanged
    gens_.push_back(x_new);
    const std::size_t gi = gens_.size() - 1;
    members_.resize(gens_.size());
    for (auto& f : facets_) f.incidence.resize(gens_.size());

    if (!initialized_) {
        pending_.push_back(gi);
        if (rank(gens_) == dim_) build_initial_simplex();
        return;
    }
    insert_full(gi);
}

void HullState::build_initial_simplex() {
    // greedy independent subset in insertion order
    std::vector<std::size_t> simplex;
    IntMatrix picked;
    for (std::size_t gi : pending_) {
        picked.push_back(gens_[gi]);
        if (rank(picked) == picked.size())
            simplex.push_back(gi);
        else
            picked.pop_back();
        if (simplex.size() == dim_) break;
    }
    for (std::size_t gi : simplex) members_.set(gi);
    Adjugate av = adjugate(picked);
    int s = sgn(av.det);
    for (std::size_t i = 0; i < dim_; ++i) {
        IntVector form(dim_);
        for (std::size_t j = 0; j < dim_; ++j) form[j] = s * av.adj[j][i];
        facets_.push_back(make_facet(primitive_part(form)));
    }
    if (with_triangulation_)
        tri_.cells.push_back({simplex, abs(av.det)});
    initialized_ = true;

    std::vector<std::size_t> rest;
    for (std::size_t gi : pending_)
        if (std::find(simplex.begin(), simplex.end(), gi) == simplex.end()) rest.push_back(gi);
    pending_.clear();
    for (std::size_t gi : rest) insert_full(gi);
}

void HullState::insert_full(std::size_t gi) {
    members_.set(gi);
    const IntVector& x = gens_[gi];
    const std::size_t nf = facets_.size();
    std::vector<Int> vals(nf);
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < nf; ++i) {
        vals[i] = dot(facets_[i].form, x);
        int s = sgn(vals[i]);
        if (s > 0)
            pos.push_back(i);
        else if (s < 0)
            neg.push_back(i);
        else
            zero.push_back(i);
    }

    if (neg.empty()) {
        // x in C'; only incidence data changes
        for (std::size_t i : zero) {
            facets_[i].incidence.set(gi);
            facets_[i].simplicial = facets_[i].incidence.count() + 1 == dim_;
        }
        return;
    }

    // generators lying both on a positive and on a negative hyperplane
    IndexSet on_pos(gens_.size()), on_neg(gens_.size());
    for (std::size_t i : pos) on_pos |= facets_[i].incidence;
    for (std::size_t i : neg) on_neg |= facets_[i].incidence;
    const IndexSet crossing = on_pos & on_neg;

    const std::ptrdiff_t need = static_cast<std::ptrdiff_t>(dim_) - 2;
    auto active = [&](std::size_t i) {
        return static_cast<std::ptrdiff_t>((facets_[i].incidence & crossing).count()) >= need;
    };

    std::vector<std::size_t> pos_simp, pos_nonsimp, neg_simp, neg_nonsimp;
    for (std::size_t i : pos) {
        if (!active(i)) continue;
        (facets_[i].simplicial ? pos_simp : pos_nonsimp).push_back(i);
    }
    for (std::size_t i : neg) {
        if (!active(i)) continue;
        (facets_[i].simplicial ? neg_simp : neg_nonsimp).push_back(i);
    }

    // containment list for (D3): negative facets outside the paired simplicial
    // set, and everything in Z
    std::vector<std::size_t> containers;
    {
        std::set<std::size_t> paired(neg_simp.begin(), neg_simp.end());
        for (std::size_t i : neg)
            if (!paired.count(i)) containers.push_back(i);
        for (std::size_t i : zero) containers.push_back(i);
    }

    std::vector<std::size_t> nonsimp_all;
    for (std::size_t i = 0; i < nf; ++i)
        if (!facets_[i].simplicial) nonsimp_all.push_back(i);

    auto subfacet_keys = [&](std::size_t fi) {
        std::vector<std::size_t> idx;
        for (std::size_t b = facets_[fi].incidence.find_first(); b != IndexSet::npos;
             b = facets_[fi].incidence.find_next(b))
            idx.push_back(b);
        std::vector<std::vector<std::size_t>> keys;
        for (std::size_t omit = 0; omit < idx.size(); ++omit) {
            std::vector<std::size_t> key;
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (j != omit) key.push_back(idx[j]);
            keys.push_back(std::move(key));
        }
        return keys;
    };

    // (D2) subfacets of the simplicial negative facets, duplicates cancel
    std::map<std::vector<std::size_t>, std::size_t> pairing;
    for (std::size_t ni : neg_simp) {
        for (auto& key : subfacet_keys(ni)) {
            auto it = pairing.find(key);
            if (it != pairing.end())
                pairing.erase(it);
            else
                pairing.emplace(std::move(key), ni);
        }
    }

    auto key_in_facet = [&](const std::vector<std::size_t>& key, std::size_t fi) {
        for (std::size_t b : key)
            if (!facets_[fi].incidence.test(b)) return false;
        return true;
    };

    // (D3)
    for (auto it = pairing.begin(); it != pairing.end();) {
        bool buried = false;
        for (std::size_t ci : containers)
            if (key_in_facet(it->first, ci)) {
                buried = true;
                break;
            }
        it = buried ? pairing.erase(it) : ++it;
    }

    std::vector<std::pair<std::size_t, std::size_t>> new_pairs; // (pos, neg)

    // (D5) partners among the simplicial positive facets
    for (std::size_t pi : pos_simp) {
        for (auto& key : subfacet_keys(pi)) {
            auto it = pairing.find(key);
            if (it != pairing.end()) {
                new_pairs.emplace_back(pi, it->second);
                pairing.erase(it);
            }
        }
    }

    // (D6) remaining partners are nonsimplicial positive facets
    for (const auto& [key, ni] : pairing) {
        for (std::size_t pi : pos_nonsimp) {
            if (key_in_facet(key, pi)) {
                new_pairs.emplace_back(pi, ni);
                break;
            }
        }
    }

    // (D7) nonsimplicial negative facets against all positive ones
    const bool use_containment_rule =
        static_cast<long>(nonsimp_all.size()) < rule_threshold_;
    for (std::size_t ni : neg_nonsimp) {
        for (std::size_t pi : pos) {
            if (!active(pi)) continue;
            IndexSet common = facets_[ni].incidence & facets_[pi].incidence;
            const std::ptrdiff_t cnt = static_cast<std::ptrdiff_t>(common.count());
            if (cnt < need) continue; // (i)
            bool is_new;
            if (facets_[pi].simplicial) {
                is_new = (cnt == need); // (ii)
            } else if (use_containment_rule) {
                // (iv) only N and P among the nonsimplicial facets contain the
                // intersection
                is_new = true;
                for (std::size_t g : nonsimp_all) {
                    if (g == ni || g == pi) continue;
                    if (common.is_subset_of(facets_[g].incidence)) {
                        is_new = false;
                        break;
                    }
                }
            } else {
                // (iii) rank test
                IntMatrix rows;
                for (std::size_t b = common.find_first(); b != IndexSet::npos;
                     b = common.find_next(b))
                    rows.push_back(gens_[b]);
                is_new = static_cast<std::ptrdiff_t>(rank(rows)) == need;
            }
            if (is_new) new_pairs.emplace_back(pi, ni);
        }
    }

    std::set<IntVector> new_forms;
    for (const auto& [pi, ni] : new_pairs)
        new_forms.insert(
            primitive_part(combine(vals[pi], facets_[ni].form, vals[ni], facets_[pi].form)));

    // extend the triangulation before the facet list changes: new cells are
    // cones over cell facets lying in a visible (negative) facet
    if (with_triangulation_) {
        std::vector<SimplicialCell> added;
        for (const auto& cell : tri_.cells) {
            for (std::size_t omit = 0; omit < cell.generator_indices.size(); ++omit) {
                std::vector<std::size_t> face;
                for (std::size_t j = 0; j < cell.generator_indices.size(); ++j)
                    if (j != omit) face.push_back(cell.generator_indices[j]);
                bool visible = false;
                for (std::size_t ni : neg) {
                    if (key_in_facet(face, ni)) {
                        visible = true;
                        break;
                    }
                }
                if (!visible) continue;
                face.push_back(gi);
                IntMatrix rows;
                for (std::size_t b : face) rows.push_back(gens_[b]);
                added.push_back({std::move(face), determinant_abs(rows)});
            }
        }
        for (auto& c : added) tri_.cells.push_back(std::move(c));
    }

    std::vector<FacetRecord> next;
    next.reserve(pos.size() + zero.size() + new_forms.size());
    for (std::size_t i : pos) next.push_back(std::move(facets_[i]));
    for (std::size_t i : zero) {
        facets_[i].incidence.set(gi);
        facets_[i].simplicial = facets_[i].incidence.count() + 1 == dim_;
        next.push_back(std::move(facets_[i]));
    }
    facets_ = std::move(next);
    for (const auto& form : new_forms) facets_.push_back(make_facet(form));
}

std::vector<SupportForm> dual_cone(const IntMatrix& generators) {
    if (generators.empty()) throw MathError("ZeroCone", "no generators");
    const std::size_t d = generators[0].size();
    if (rank(generators) != d)
        throw MathError("NotFullDim", "generators do not span the ambient space");
    HullState hull(d);
    for (const auto& g : generators) hull.insert_generator(g);
    IntMatrix forms;
    for (const auto& f : hull.facets()) forms.push_back(f.form);
    std::sort(forms.begin(), forms.end(), lex_less);
    std::vector<SupportForm> out;
    out.reserve(forms.size());
    for (auto& f : forms) out.push_back({std::move(f), SupportForm::Role::support});
    return out;
}

} // namespace diocone
