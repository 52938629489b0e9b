#include "diocone/dual.hpp"

#include "diocone/errors.hpp"

#include <algorithm>
#include <set>

namespace diocone {

DualState DualState::full_lattice(std::size_t dim) {
    DualState s;
    s.dim = dim;
    s.unit_basis = identity_matrix(dim);
    return s;
}

namespace {

Int sigma_sum(const std::vector<Int>& sigma) {
    Int s = 0;
    for (const Int& v : sigma) s += v;
    return s;
}

Candidate make_candidate(IntVector v, std::vector<Int> sigma, long generation,
                         std::optional<Int> hint) {
    Candidate c;
    c.value.vector = std::move(v);
    c.value.tdeg = sigma_sum(sigma);
    c.value.sigma_values = std::move(sigma);
    c.generation = generation;
    c.reducer_hint = std::move(hint);
    return c;
}

// gcd of the entries together with cofactors: sum e_i a_i = g >= 0.
Int extended_gcd(const IntVector& a, IntVector& e) {
    e.assign(a.size(), 0);
    Int g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (g == 0) {
            g = abs(a[i]);
            e[i] = a[i] > 0 ? 1 : -1;
            continue;
        }
        Int g2, s, t;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                   a[i].get_mpz_t());
        for (std::size_t j = 0; j < i; ++j) e[j] *= s;
        e[i] = t;
        g = g2;
    }
    return g;
}

// Merge freshly generated candidates into an auto-reduced pool without
// re-reducing the whole pool: reduce the newcomers among themselves, drop
// pool elements a surviving newcomer reduces, and keep the pool sorted.
// Returns true when the pool changed. Transitivity of the sigma order makes
// this equivalent to auto_reduce on the union.
bool merge_pool(std::vector<Candidate>& pool, std::vector<Candidate>&& incoming) {
    std::vector<Candidate> fresh = auto_reduce(incoming);
    std::erase_if(fresh, [&](const Candidate& c) {
        for (const auto& p : pool)
            if (p.value.vector == c.value.vector || reduces(p.value, c.value)) return true;
        return false;
    });
    if (fresh.empty()) return false;
    std::erase_if(pool, [&](const Candidate& p) {
        for (const auto& f : fresh)
            if (reduces(f.value, p.value)) return true;
        return false;
    });
    auto less = [](const Candidate& a, const Candidate& b) {
        if (a.value.tdeg != b.value.tdeg) return a.value.tdeg < b.value.tdeg;
        return lex_less(a.value.vector, b.value.vector);
    };
    for (auto& c : fresh)
        pool.insert(std::lower_bound(pool.begin(), pool.end(), c, less), std::move(c));
    return true;
}

} // namespace

CutOutcome cut_by_halfspace(const DualState& state, const SupportForm& lambda) {
    const IntVector& lam = lambda.coeffs;
    const std::size_t m = state.inserted_forms.size();

    // (D1) restrict lambda to the unit group
    IntVector unit_values;
    unit_values.reserve(state.unit_basis.size());
    for (const auto& u : state.unit_basis) unit_values.push_back(dot(lam, u));
    const bool case_b = !is_zero(unit_values);

    CutOutcome out;
    IntMatrix new_units;
    IntVector h;
    Int g = 0;
    if (!case_b) {
        new_units = state.unit_basis;
    } else {
        for (const auto& c : integer_kernel_basis({unit_values}))
            new_units.push_back(vec_times_matrix(c, state.unit_basis));
        // (D2) kernel complement with minimal positive lambda-value
        IntVector e;
        g = extended_gcd(unit_values, e);
        h = vec_times_matrix(e, state.unit_basis);
        out.h_element = h;
    }

    // (D3)-(D5) seed the two pools; sigma-values of the old forms are
    // unaffected by adding multiples of h, so the cache carries over
    std::vector<Candidate> plus, minus;
    for (const auto& c : state.hilbert_basis) {
        IntVector v = c.value.vector;
        Int lv = dot(lam, v);
        if (case_b) {
            Int q;
            if (lv >= 0) {
                mpz_fdiv_q(q.get_mpz_t(), lv.get_mpz_t(), g.get_mpz_t());
                if (q != 0) v = sub(v, scale(q, h));
            } else {
                Int neg = -lv;
                mpz_fdiv_q(q.get_mpz_t(), neg.get_mpz_t(), g.get_mpz_t());
                if (q != 0) v = add(v, scale(q, h));
            }
            lv = lv - q * g * (lv >= 0 ? 1 : -1);
        }
        if (lv >= 0) {
            std::vector<Int> sig = c.value.sigma_values;
            sig.push_back(lv);
            plus.push_back(make_candidate(v, std::move(sig), 0, std::nullopt));
        }
        if (lv <= 0) {
            std::vector<Int> sig = c.value.sigma_values;
            sig.push_back(-lv);
            minus.push_back(make_candidate(std::move(v), std::move(sig), 0, std::nullopt));
        }
    }
    if (case_b) {
        std::vector<Int> sig(m, 0);
        sig.push_back(g);
        plus.push_back(make_candidate(h, sig, 0, std::nullopt));
        minus.push_back(make_candidate(negate(h), std::move(sig), 0, std::nullopt));
    }
    plus = auto_reduce(plus);
    minus = auto_reduce(minus);

    // (D6)-(D8) generation loop; sigma index m holds lambda on the plus side
    // and -lambda on the minus side
    std::set<IntVector> seen_sums;
    long gen = 0;
    while (true) {
        ++gen;
        std::vector<Candidate> plus_new, minus_new;
        auto survives = [](const Candidate& c, const std::vector<Candidate>& pool) {
            for (const auto& p : pool)
                if (reduces(p.value, c.value)) return false;
            return true;
        };
        auto combine = [&](const Candidate& x, const Candidate& y) {
            const Int& lx = x.value.sigma_values[m];
            const Int& ly = y.value.sigma_values[m]; // = -lambda(y)
            if (lx == 0 || ly == 0) return;
            if (x.reducer_hint && ly > *x.reducer_hint) return;
            if (y.reducer_hint && lx > *y.reducer_hint) return;
            IntVector sv = add(x.value.vector, y.value.vector);
            if (is_zero(sv)) return;
            if (!seen_sums.insert(sv).second) return;
            std::vector<Int> sig(m + 1);
            for (std::size_t j = 0; j < m; ++j)
                sig[j] = x.value.sigma_values[j] + y.value.sigma_values[j];
            Int lv = lx - ly;
            if (lv >= 0) {
                sig[m] = lv;
                Candidate c = make_candidate(sv, sig, gen, lx);
                if (survives(c, plus)) plus_new.push_back(std::move(c));
            }
            if (lv <= 0) {
                sig[m] = -lv;
                Candidate c = make_candidate(std::move(sv), std::move(sig), gen, ly);
                if (survives(c, minus)) minus_new.push_back(std::move(c));
            }
        };
        // only pairs involving a generation-(gen-1) element are fresh;
        // seen_sums absorbs the recent-by-recent overlap
        for (const auto& x : plus) {
            if (x.generation != gen - 1) continue;
            for (const auto& y : minus) combine(x, y);
        }
        for (const auto& y : minus) {
            if (y.generation != gen - 1) continue;
            for (const auto& x : plus)
                if (x.generation != gen - 1) combine(x, y);
        }
        bool plus_changed = merge_pool(plus, std::move(plus_new));
        bool minus_changed = merge_pool(minus, std::move(minus_new));
        if (!plus_changed && !minus_changed) break;
    }

    out.plus_state.dim = state.dim;
    out.plus_state.inserted_forms = state.inserted_forms;
    out.plus_state.inserted_forms.push_back(lambda);
    out.plus_state.unit_basis = std::move(new_units);
    for (auto& c : plus) {
        c.generation = 0;
        c.reducer_hint.reset();
        out.plus_state.hilbert_basis.push_back(std::move(c));
    }
    for (const auto& c : minus) out.minus_basis.push_back(c.value.vector);
    out.generations = gen;
    return out;
}

std::vector<SupportForm> order_hyperplanes(const std::vector<SupportForm>& forms) {
    if (forms.empty()) return {};
    const std::size_t d = forms[0].coeffs.size();

    // greedy proxy simulation: units shrink by kernels, basis keeps the
    // nonnegative survivors plus the case-(b) element h
    IntMatrix units = identity_matrix(d);
    IntMatrix basis;
    std::vector<bool> used(forms.size(), false);
    std::vector<SupportForm> out;
    for (std::size_t round = 0; round < forms.size(); ++round) {
        std::size_t best = forms.size();
        std::size_t best_neg = 0;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            if (used[i]) continue;
            std::size_t neg = 0;
            for (const auto& u : units)
                if (dot(forms[i].coeffs, u) < 0) ++neg;
            for (const auto& b : basis)
                if (dot(forms[i].coeffs, b) < 0) ++neg;
            if (best == forms.size() || neg < best_neg) {
                best = i;
                best_neg = neg;
            }
        }
        used[best] = true;
        const IntVector& lam = forms[best].coeffs;
        out.push_back(forms[best]);

        IntVector values;
        for (const auto& u : units) values.push_back(dot(lam, u));
        if (!is_zero(values)) {
            IntVector e;
            extended_gcd(values, e);
            IntVector h = vec_times_matrix(e, units);
            IntMatrix shrunk;
            for (const auto& c : integer_kernel_basis({values}))
                shrunk.push_back(vec_times_matrix(c, units));
            units = std::move(shrunk);
            basis.push_back(std::move(h));
        }
        IntMatrix kept;
        for (auto& b : basis)
            if (dot(lam, b) >= 0) kept.push_back(std::move(b));
        basis = std::move(kept);
    }
    return out;
}

HilbertResult dual_hilbert_basis(const std::vector<SupportForm>& forms,
                                 const IntMatrix& equations, HyperplaneOrder order) {
    std::size_t d = 0;
    if (!forms.empty()) d = forms[0].coeffs.size();
    else if (!equations.empty()) d = equations[0].size();
    if (d == 0) throw MathError("ZeroCone", "no forms or equations given");

    HilbertResult res;

    // pass to the integer kernel of the equations
    bool have_equations = false;
    for (const auto& eq : equations)
        if (!is_zero(eq)) have_equations = true;
    IntMatrix kernel = have_equations ? integer_kernel_basis(equations) : identity_matrix(d);
    if (kernel.empty()) { // equations force x = 0
        res.dim = 0;
        res.pointed = true;
        return res;
    }

    std::vector<SupportForm> projected;
    std::set<IntVector> seen_forms;
    for (const auto& f : forms) {
        IntVector c = matrix_times_vec(kernel, f.coeffs);
        if (is_zero(c)) continue;
        c = primitive_part(c);
        if (seen_forms.insert(c).second) projected.push_back({std::move(c), SupportForm::Role::support});
    }
    if (order == HyperplaneOrder::heuristic) projected = order_hyperplanes(projected);

    DualState state = DualState::full_lattice(kernel.size());
    for (const auto& f : projected) state = cut_by_halfspace(state, f).plus_state;

    IntMatrix basis_vectors;
    for (const auto& c : state.hilbert_basis)
        basis_vectors.push_back(vec_times_matrix(c.value.vector, kernel));
    std::sort(basis_vectors.begin(), basis_vectors.end(), lex_less);
    IntMatrix units;
    for (const auto& u : state.unit_basis) units.push_back(vec_times_matrix(u, kernel));

    res.pointed = units.empty();
    if (!res.pointed) {
        res.hilbert_basis = std::move(basis_vectors);
        res.unit_basis = std::move(units);
        IntMatrix span = res.hilbert_basis;
        for (const auto& u : res.unit_basis) span.push_back(u);
        res.dim = rank(span);
        return res;
    }
    if (basis_vectors.empty()) {
        res.dim = 0;
        return res;
    }

    // support hyperplanes and extreme rays via the hull of the basis
    FullDimResult full = to_full_dimensional(basis_vectors, LatticeMode::ambient_lattice);
    HullState hull(full.embedding.rank);
    for (const auto& v : full.transformed) hull.insert_generator(v);
    ConeState cone = make_cone_state(full.transformed, hull.support_forms(), full.embedding);

    res.dim = full.embedding.rank;
    res.embedding = full.embedding;
    res.hilbert_basis = std::move(basis_vectors);
    for (const auto& ray : extreme_rays(cone))
        res.extreme_rays.push_back(full.embedding.backward(ray));
    std::sort(res.extreme_rays.begin(), res.extreme_rays.end(), lex_less);
    for (const auto& f : cone.support_forms)
        res.support_forms.push_back(full.embedding.backward_form(f.coeffs));
    std::sort(res.support_forms.begin(), res.support_forms.end(), lex_less);
    return res;
}

} // namespace diocone
