#include "diocone/reduction.hpp"

#include "diocone/errors.hpp"

#include <algorithm>
#include <list>

namespace diocone {

bool reduces(const GradedValue& y, const GradedValue& x) {
    if (x.vector == y.vector) return false;
    for (std::size_t i = 0; i < x.sigma_values.size(); ++i)
        if (x.sigma_values[i] < y.sigma_values[i]) return false;
    return true;
}

std::vector<GradedValue> reduce_to_hilbert_basis(const std::vector<Candidate>& candidates) {
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].value.tdeg < candidates[i - 1].value.tdeg)
            throw MathError("UnsortedInput", "candidates not sorted by total degree");

    std::list<GradedValue> head;
    std::size_t i = 0;
    while (i < candidates.size() && candidates[i].value.tdeg == 0) ++i; // no units
    if (i < candidates.size()) {
        const Int min_deg = candidates[i].value.tdeg;
        for (; i < candidates.size() && candidates[i].value.tdeg == min_deg; ++i)
            head.push_back(candidates[i].value);
    }
    for (; i < candidates.size(); ++i) {
        const GradedValue& x = candidates[i].value;
        bool reduced = false, appended = false;
        for (auto it = head.begin(); it != head.end(); ++it) {
            if (x.tdeg < 2 * it->tdeg) {
                appended = true; // nothing beyond can reduce x either
                break;
            }
            if (reduces(*it, x)) {
                head.splice(head.begin(), head, it); // successful reducer to the front
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            (void)appended;
            head.push_back(x);
        }
    }
    std::vector<GradedValue> out(head.begin(), head.end());
    std::sort(out.begin(), out.end(), [](const GradedValue& a, const GradedValue& b) {
        if (a.tdeg != b.tdeg) return a.tdeg < b.tdeg;
        return lex_less(a.vector, b.vector);
    });
    return out;
}

std::vector<Candidate> auto_reduce(const std::vector<Candidate>& candidates) {
    std::vector<Candidate> sorted = candidates;
    std::sort(sorted.begin(), sorted.end(), [](const Candidate& a, const Candidate& b) {
        if (a.value.tdeg != b.value.tdeg) return a.value.tdeg < b.value.tdeg;
        return lex_less(a.value.vector, b.value.vector);
    });
    std::vector<Candidate> kept;
    for (auto& c : sorted) {
        if (c.value.tdeg == 0) continue; // unit
        if (!kept.empty() && kept.back().value.vector == c.value.vector) continue;
        bool reducible = false;
        for (const auto& k : kept)
            if (reduces(k.value, c.value)) {
                reducible = true;
                break;
            }
        if (!reducible) kept.push_back(std::move(c));
    }
    return kept;
}

} // namespace diocone
