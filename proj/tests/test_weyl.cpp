#include "doctest.h"

#include "nilcoh/weyl.hpp"

#include <filesystem>
#include <set>

using namespace nilcoh;

namespace {

// Root-coordinate form of a weight known to lie in the root lattice.
IntVector root_coords(const RootSystem& rs, const IntVector& weight)
{
    auto c = rs.to_root_coords(weight);
    REQUIRE(c.has_value());
    return *c;
}

} // namespace

TEST_CASE("enumeration sizes and length polynomials")
{
    const auto a1 = WeylGroup::enumerate(RootSystem::build("A1"));
    CHECK(a1.size() == 2);
    CHECK(a1.length_polynomial() == std::vector<long long>{1, 1});

    const auto a2 = WeylGroup::enumerate(RootSystem::build("A2"));
    CHECK(a2.size() == 6);
    CHECK(a2.length_polynomial() == std::vector<long long>{1, 2, 2, 1});

    const auto b2 = WeylGroup::enumerate(RootSystem::build("B2"));
    CHECK(b2.size() == 8);
    CHECK(b2.length_polynomial() == std::vector<long long>{1, 2, 2, 2, 1});

    CHECK(WeylGroup::enumerate(RootSystem::build("G2")).size() == 12);
    CHECK(WeylGroup::enumerate(RootSystem::build("A3")).size() == 24);
    CHECK(WeylGroup::enumerate(RootSystem::build("B3")).size() == 48);
    CHECK(WeylGroup::enumerate(RootSystem::build("D4")).size() == 192);
    CHECK(WeylGroup::enumerate(RootSystem::build("F4")).size() == 1152);
}

TEST_CASE("enumeration bound")
{
    EnumerateOptions small;
    small.max_order = 10;
    CHECK_THROWS_AS(WeylGroup::enumerate(RootSystem::build("A3"), small), BudgetError);
}

TEST_CASE("element invariants")
{
    for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        CAPTURE(label);
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        std::set<std::vector<int>> inversion_sets;
        const std::size_t w0 = W.longest();
        CHECK(W[w0].length() == rs.num_positive());
        for (std::size_t k = 0; k < W.size(); ++k) {
            const WeylElement& w = W[k];
            const auto inv = inversion_set(w, rs);
            CHECK(static_cast<int>(inv.size()) == w.length());
            CHECK(std::is_sorted(inv.begin(), inv.end()));
            inversion_sets.insert(inv);
            CHECK(std::abs(w.action.cast<double>().determinant()) == doctest::Approx(1.0));
            // W-invariance of the inner product on fundamental weights.
            for (int i = 0; i < rs.rank(); ++i) {
                for (int j = 0; j < rs.rank(); ++j) {
                    const IntVector a = fundamental_weight(rs, i);
                    const IntVector b = fundamental_weight(rs, j);
                    CHECK(rs.inner(w.apply(a), w.apply(b)) == rs.inner(a, b));
                }
            }
            CHECK(W[W.multiply(w0, k)].length() == rs.num_positive() - w.length());
            CHECK(W.multiply(k, W.inverse(k)) == W.identity());
            CHECK(W.from_word(w.word) == k);
        }
        CHECK(inversion_sets.size() == W.size());
        CHECK(inversion_set(W[w0], rs).size() == static_cast<std::size_t>(rs.num_positive()));
        CHECK(inversion_set(W[0], rs).empty());
    }
}

TEST_CASE("dot action composes")
{
    const RootSystem rs = RootSystem::build("B2");
    const auto W = WeylGroup::enumerate(rs);
    const IntVector lambda = make_vector({2, 1});
    for (std::size_t a = 0; a < W.size(); ++a) {
        for (std::size_t b = 0; b < W.size(); ++b)
            CHECK(dot(W[a], dot(W[b], lambda, rs), rs) == dot(W[W.multiply(a, b)], lambda, rs));
        CHECK(rs.in_root_lattice(dot(W[a], IntVector::Zero(2), rs)));
    }
    CHECK(dot(W[0], lambda, rs) == lambda);
}

TEST_CASE("dot action examples")
{
    // B2 with alpha long (index 0) and beta short (index 1).
    const RootSystem b2 = RootSystem::build("B2");
    const auto W = WeylGroup::enumerate(b2);
    const IntVector zero = IntVector::Zero(2);
    const std::size_t sb_sa = W.from_word({1, 0});
    const std::size_t sa_sb = W.from_word({0, 1});
    CHECK(root_coords(b2, dot(W[sb_sa], zero, b2)) == make_vector({-1, -3}));
    CHECK(root_coords(b2, dot(W[sa_sb], zero, b2)) == make_vector({-2, -1}));

    const RootSystem a2 = RootSystem::build("A2");
    const auto Wa = WeylGroup::enumerate(a2);
    const IntVector lambda = make_vector({2, 1});
    const IntVector diff = dot(Wa[Wa.longest()], lambda, a2) - lambda;
    CHECK(root_coords(a2, diff) == make_vector({-5, -5}));
}

TEST_CASE("inversion set example")
{
    const RootSystem a2 = RootSystem::build("A2");
    const auto W = WeylGroup::enumerate(a2);
    const auto inv = inversion_set(W[W.from_word({0, 1})], a2);
    REQUIRE(inv.size() == 2);
    CHECK(a2.positive_root(inv[0]).coords == make_vector({1, 0}));
    CHECK(a2.positive_root(inv[1]).coords == make_vector({1, 1}));
}

TEST_CASE("minimal coset representatives")
{
    for (const char* label : {"A2", "B2", "G2", "A3", "B3"}) {
        CAPTURE(label);
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        CHECK(min_coset_reps(W, {}).reps.size() == W.size());
        std::vector<int> all(static_cast<std::size_t>(rs.rank()));
        for (int i = 0; i < rs.rank(); ++i)
            all[static_cast<std::size_t>(i)] = i;
        const auto full = min_coset_reps(W, all);
        REQUIRE(full.reps.size() == 1);
        CHECK(full.reps[0] == W.identity());

        for (int j = 0; j < rs.rank(); ++j) {
            const std::vector<int> J{j};
            const auto cs = min_coset_reps(W, J);
            const auto WJ = parabolic_subgroup(W, J);
            CHECK(cs.reps.size() * WJ.size() == W.size());
            for (std::size_t r : cs.reps) {
                // Minimal length in the right coset W_J r.
                for (std::size_t u : WJ)
                    CHECK(W[W.multiply(u, r)].length() >= W[r].length());
            }
            for (std::size_t k = 1; k < cs.reps.size(); ++k)
                CHECK(W[cs.reps[k - 1]].length() <= W[cs.reps[k]].length());
        }
    }

    const RootSystem a2 = RootSystem::build("A2");
    const auto W = WeylGroup::enumerate(a2);
    const auto cs = min_coset_reps(W, {0});
    REQUIRE(cs.reps.size() == 3);
    CHECK(W[cs.reps[0]].name() == "e");
    CHECK(W[cs.reps[1]].name() == "s2");
    CHECK(W[cs.reps[2]].name() == "s2s1");
}

TEST_CASE("Levi and nilradical roots")
{
    const RootSystem b2 = RootSystem::build("B2");
    CHECK(levi_positive_roots(b2, {0}).size() == 1);
    CHECK(nilradical_roots(b2, {0}).size() == 3);
    CHECK(nilradical_roots(b2, {}).size() == 4);
    CHECK(nilradical_roots(b2, {0, 1}).empty());
}

TEST_CASE("regular dot orbits are free")
{
    // For dominant lambda, w1.lambda = w2.lambda forces w1 = w2.
    for (const char* label : {"A2", "B2", "A3"}) {
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        for (int a = 0; a <= 2; ++a) {
            for (int b = 0; b <= 2; ++b) {
                IntVector lambda = IntVector::Zero(rs.rank());
                lambda[0] = a;
                lambda[rs.rank() - 1] = b;
                std::set<IntVector, LexLess> images;
                for (const WeylElement& w : W.elements())
                    images.insert(dot(w, lambda, rs));
                CHECK(images.size() == W.size());
            }
        }
    }
}

TEST_CASE("disk cache round trip")
{
    const auto dir = std::filesystem::temp_directory_path() / "nilcoh-weyl-cache-test";
    std::filesystem::remove_all(dir);
    EnumerateOptions opts;
    opts.cache_dir = dir;
    const RootSystem rs = RootSystem::build("B3");
    const auto first = WeylGroup::enumerate(rs, opts);
    CHECK_FALSE(first.loaded_from_cache());
    const auto second = WeylGroup::enumerate(rs, opts);
    CHECK(second.loaded_from_cache());
    REQUIRE(second.size() == first.size());
    for (std::size_t k = 0; k < first.size(); ++k) {
        CHECK(first[k].word == second[k].word);
        CHECK(first[k].action == second[k].action);
    }
    std::filesystem::remove_all(dir);
}
