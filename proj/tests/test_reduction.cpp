#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diocone/errors.hpp"
#include "diocone/fourier_motzkin.hpp"
#include "diocone/reduction.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <random>

using namespace diocone;

namespace {

std::vector<SupportForm> forms_of(const IntMatrix& coeffs) {
    std::vector<SupportForm> out;
    for (const auto& c : coeffs) out.push_back({c, SupportForm::Role::support});
    return out;
}

Candidate cand(const IntVector& v, const std::vector<SupportForm>& forms) {
    return {standard_map(v, forms), 0, std::nullopt};
}

std::vector<Candidate> sorted_candidates(IntMatrix vecs, const std::vector<SupportForm>& forms) {
    std::vector<Candidate> out;
    for (const auto& v : vecs) out.push_back(cand(v, forms));
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.value.tdeg != b.value.tdeg) return a.value.tdeg < b.value.tdeg;
        return lex_less(a.value.vector, b.value.vector);
    });
    return out;
}

IntMatrix vectors_of(const std::vector<GradedValue>& vals) {
    IntMatrix out;
    for (const auto& v : vals) out.push_back(v.vector);
    return out;
}

const IntMatrix kOrthantForms{{1, 0}, {0, 1}};
const IntMatrix kFig4Forms{{-1, 2}, {3, -1}};

} // namespace

TEST_CASE("reduces") {
    auto orthant = forms_of(kOrthantForms);
    CHECK(reduces(standard_map({1, 0}, orthant), standard_map({2, 0}, orthant)));
    CHECK_FALSE(reduces(standard_map({1, 0}, orthant), standard_map({0, 1}, orthant)));

    auto fig4 = forms_of(kFig4Forms);
    CHECK(reduces(standard_map({1, 1}, fig4), standard_map({2, 2}, fig4)));
    CHECK_FALSE(reduces(standard_map({1, 1}, fig4), standard_map({1, 2}, fig4)));
    // equal elements never reduce each other
    CHECK_FALSE(reduces(standard_map({1, 1}, fig4), standard_map({1, 1}, fig4)));
}

TEST_CASE("reduce_to_hilbert_basis") {
    auto fig4 = forms_of(kFig4Forms);
    auto result = reduce_to_hilbert_basis(
        sorted_candidates({{1, 1}, {2, 1}, {1, 3}, {1, 2}, {2, 2}, {2, 3}}, fig4));
    CHECK(oracle::same_rows(vectors_of(result), {{1, 1}, {2, 1}, {1, 2}, {1, 3}}));

    auto orthant = forms_of(kOrthantForms);
    CHECK(oracle::same_rows(
        vectors_of(reduce_to_hilbert_basis(sorted_candidates({{1, 0}, {0, 1}}, orthant))),
        {{1, 0}, {0, 1}}));
    CHECK(oracle::same_rows(
        vectors_of(reduce_to_hilbert_basis(sorted_candidates({{1, 0}, {0, 1}, {1, 1}}, orthant))),
        {{1, 0}, {0, 1}}));

    SUBCASE("unsorted input is rejected") {
        std::vector<Candidate> bad{cand({2, 2}, fig4), cand({1, 1}, fig4)};
        CHECK_THROWS_AS(reduce_to_hilbert_basis(bad), MathError);
    }
}

TEST_CASE("auto_reduce") {
    auto orthant = forms_of(kOrthantForms);
    auto a = auto_reduce(sorted_candidates({{1, 0}, {2, 0}, {3, 0}}, orthant));
    REQUIRE(a.size() == 1);
    CHECK(a[0].value.vector == IntVector{1, 0});

    auto b = auto_reduce(sorted_candidates({{1, 0}, {0, 1}}, orthant));
    CHECK(b.size() == 2);

    auto fig4 = forms_of(kFig4Forms);
    auto c = auto_reduce(sorted_candidates({{1, 1}, {2, 2}, {1, 2}}, fig4));
    IntMatrix kept;
    for (const auto& x : c) kept.push_back(x.value.vector);
    CHECK(oracle::same_rows(kept, {{1, 1}, {1, 2}}));
}

TEST_CASE("random cones: oracle agreement, irreducibility, generation") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 15) {
        std::size_t d = 2 + done % 2;
        IntMatrix gens = oracle::random_cone(rng, d, d + 2, 4);
        auto expected = oracle::hilbert_basis(gens);
        if (!expected) continue;
        IntMatrix form_rows = oracle::facet_forms(gens);
        auto forms = forms_of(form_rows);

        // candidate pool: every cone point below the oracle's own bound
        std::vector<Int> tdegs;
        for (const auto& g : gens) tdegs.push_back(standard_map(g, forms).tdeg);
        std::sort(tdegs.rbegin(), tdegs.rend());
        Int bound = 0;
        for (std::size_t i = 0; i < d && i < tdegs.size(); ++i) bound += tdegs[i];
        auto pool = oracle::cone_points_tdeg_bounded(form_rows, bound);
        if (!pool) continue;
        IntMatrix nonzero;
        for (auto& p : *pool)
            if (!is_zero(p)) nonzero.push_back(std::move(p));

        auto result = reduce_to_hilbert_basis(sorted_candidates(nonzero, forms));
        CHECK(oracle::same_rows(vectors_of(result), *expected));

        // pairwise irreducibility of the output
        for (const auto& x : result)
            for (const auto& y : result) CHECK_FALSE(reduces(y, x));

        // generation: every candidate decomposes over the output
        for (const auto& p : nonzero) {
            std::vector<Int> s = standard_map(p, forms).sigma_values;
            bool progress = true;
            auto all_zero = [&] {
                return std::all_of(s.begin(), s.end(), [](const Int& v) { return v == 0; });
            };
            while (!all_zero() && progress) {
                progress = false;
                for (const auto& b : result) {
                    bool fits = true;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (b.sigma_values[i] > s[i]) {
                            fits = false;
                            break;
                        }
                    if (fits) {
                        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= b.sigma_values[i];
                        progress = true;
                        break;
                    }
                }
            }
            CHECK(all_zero());
        }

        // order robustness: shuffling equal-degree blocks never changes the set
        auto base = sorted_candidates(nonzero, forms);
        for (int s = 0; s < 3; ++s) {
            auto shuffled = base;
            std::size_t i = 0;
            while (i < shuffled.size()) {
                std::size_t j = i;
                while (j < shuffled.size() && shuffled[j].value.tdeg == shuffled[i].value.tdeg)
                    ++j;
                std::shuffle(shuffled.begin() + i, shuffled.begin() + j, rng);
                i = j;
            }
            CHECK(oracle::same_rows(vectors_of(reduce_to_hilbert_basis(shuffled)),
                                    *expected));
        }
        ++done;
    }
}
