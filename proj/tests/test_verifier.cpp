#include "doctest.h"

#include "nilcoh/verifier.hpp"

#include <algorithm>

using namespace nilcoh;

namespace {

bool contains(const std::vector<Violation>& vs, const std::vector<std::size_t>& elements, const IntVector& sigma)
{
    return std::any_of(vs.begin(), vs.end(),
        [&](const Violation& v) { return v.elements == elements && v.sigma == sigma; });
}

const CheckResult& check_named(const SuiteReport& r, const std::string& name)
{
    auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == name; });
    REQUIRE(it != r.checks.end());
    return *it;
}

} // namespace

TEST_CASE("sum of dot images: empty above the bound")
{
    const std::vector<std::pair<std::string, long long>> cases{{"A1", 3}, {"A2", 5}, {"A3", 7}, {"B2", 7}, {"G2", 13}};
    for (const auto& [label, p] : cases) {
        CAPTURE(label);
        const auto W = WeylGroup::enumerate(RootSystem::build(label));
        CHECK(search_sum_dot(W, p).empty());
    }
}

TEST_CASE("sum of dot images: B2 at p = 5")
{
    const RootSystem b2 = RootSystem::build("B2");
    const auto W = WeylGroup::enumerate(b2);
    const auto vs = search_sum_dot(W, 5);
    REQUIRE_FALSE(vs.empty());
    const std::size_t ba = W.from_word({1, 0});
    const std::size_t ab = W.from_word({0, 1});
    CHECK(contains(vs, {ba, ba, ab}, -b2.to_weight(make_vector({0, 1}))));
    for (const auto& v : vs)
        CHECK(revalidate(b2, v, SigmaDomain::root_lattice));
}

TEST_CASE("sum search is independent of the thread count")
{
    const auto W = WeylGroup::enumerate(RootSystem::build("B2"));
    const auto one = search_sum_dot(W, 5, SearchOptions{1});
    const auto four = search_sum_dot(W, 5, SearchOptions{4});
    CHECK(one == four);
    CHECK(std::is_sorted(one.begin(), one.end(), [](const Violation& a, const Violation& b) {
        return a.elements < b.elements;
    }));
}

TEST_CASE("search budget and modulus")
{
    const auto W = WeylGroup::enumerate(RootSystem::build("A2"));
    SearchOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(search_sum_dot(W, 5, tiny), BudgetError);
    CHECK_THROWS_AS(search_sum_dot(W, 1), PreconditionError);
}

TEST_CASE("Levi weight sums")
{
    const RootSystem b2 = RootSystem::build("B2");
    const auto W = WeylGroup::enumerate(b2);
    CHECK(search_levi_weights(W, {0}, 11).empty());
    CHECK(search_levi_weights(W, {1}, 11).empty());
    // J empty reduces to the dot-image search.
    CHECK(search_levi_weights(W, {}, 5) == search_sum_dot(W, 5));
    for (const auto& v : search_levi_weights(W, {0}, 3))
        CHECK(revalidate(b2, v, SigmaDomain::root_lattice));
}

TEST_CASE("dot collisions: A2 at p = 5 off the alcove")
{
    const RootSystem a2 = RootSystem::build("A2");
    const auto W = WeylGroup::enumerate(a2);
    const auto vs = search_dot_collisions(W, make_vector({2, 1}), Mode::modular(5), SigmaDomain::root_lattice);
    CHECK(contains(vs, {W.longest(), W.identity()}, make_vector({-1, -1})));
    for (const auto& v : vs)
        CHECK(revalidate(a2, v, SigmaDomain::root_lattice));
    // Every root-lattice collision is a weight-lattice one.
    const auto wide = search_dot_collisions(W, make_vector({2, 1}), Mode::modular(5), SigmaDomain::weight_lattice);
    for (const auto& v : vs)
        CHECK(std::find(wide.begin(), wide.end(), v) != wide.end());
}

TEST_CASE("dot collisions: none in the open alcove")
{
    const RootSystem a2 = RootSystem::build("A2");
    const auto W = WeylGroup::enumerate(a2);
    CHECK(search_dot_collisions(W, make_vector({1, 1}), Mode::modular(7), SigmaDomain::root_lattice).empty());
    CHECK(search_dot_collisions(W, make_vector({0, 0}), Mode::quantum(5), SigmaDomain::root_lattice).empty());
    const auto b2 = WeylGroup::enumerate(RootSystem::build("B2"));
    CHECK(search_dot_collisions(b2, make_vector({1, 0}), Mode::modular(7), SigmaDomain::root_lattice).empty());
}

TEST_CASE("dot collisions: gates")
{
    const auto W = WeylGroup::enumerate(RootSystem::build("A2"));
    CHECK_THROWS_AS(search_dot_collisions(W, make_vector({0, 0}), Mode::quantum(9), SigmaDomain::root_lattice),
        PreconditionError);
    CHECK_THROWS_AS(search_dot_collisions(W, make_vector({0, 0}), Mode::classical(), SigmaDomain::root_lattice),
        PreconditionError);
    CHECK_THROWS_AS(search_dot_collisions(W, make_vector({0}), Mode::modular(5), SigmaDomain::root_lattice),
        PreconditionError);
}

TEST_CASE("revalidate rejects tampered witnesses")
{
    const RootSystem b2 = RootSystem::build("B2");
    const auto W = WeylGroup::enumerate(b2);
    auto v = search_sum_dot(W, 5).front();
    CHECK(revalidate(b2, v, SigmaDomain::root_lattice));
    v.sigma[0] += 1;
    CHECK_FALSE(revalidate(b2, v, SigmaDomain::root_lattice));
    v.sigma = IntVector::Zero(2);
    CHECK_FALSE(revalidate(b2, v, SigmaDomain::root_lattice));
}

TEST_CASE("sigma domain names")
{
    CHECK(parse_sigma_domain("ZPhi") == SigmaDomain::root_lattice);
    CHECK(parse_sigma_domain("X") == SigmaDomain::weight_lattice);
    CHECK(to_string(SigmaDomain::root_lattice) == "ZPhi");
    CHECK_THROWS_AS(parse_sigma_domain("Y"), PreconditionError);
}

TEST_CASE("consistency suite: A2")
{
    const auto W = WeylGroup::enumerate(RootSystem::build("A2"));
    CHECK(consistency_suite(W, 5, 4).pass());
    const auto r = consistency_suite(W, 7, 4);
    CHECK(r.pass());
    CHECK(check_named(r, "kostant_vs_oracle").status == CheckResult::Status::pass);
    CHECK(check_named(r, "ring_signs_vs_cochain_cup").status == CheckResult::Status::pass);
    CHECK(check_named(r, "ext_vs_bigraded_character").status == CheckResult::Status::pass);
    CHECK(check_named(r, "ring_identity").status == CheckResult::Status::pass);
    CHECK(r.square_anomalies.empty());
}

TEST_CASE("consistency suite: B2 at p = 5 records the square anomaly")
{
    const RootSystem b2 = RootSystem::build("B2");
    const auto W = WeylGroup::enumerate(b2);
    const auto r = consistency_suite(W, 5, 4);
    CHECK(r.pass());
    CHECK(check_named(r, "ext_vs_bigraded_character").status == CheckResult::Status::pass);
    CHECK(check_named(r, "ring_identity").status == CheckResult::Status::skipped);
    REQUIRE(r.square_anomalies.size() == 1);
    CHECK(r.square_anomalies[0] == -b2.to_weight(make_vector({1, 3})));
}

TEST_CASE("consistency suite: skips over budget")
{
    const auto W = WeylGroup::enumerate(RootSystem::build("G2"));
    const auto r = consistency_suite(W, 13, 4);
    CHECK(r.pass());
    CHECK(check_named(r, "ext_vs_bigraded_character").status == CheckResult::Status::skipped);
    CHECK(to_string(CheckResult::Status::skipped) == "skipped");
}
