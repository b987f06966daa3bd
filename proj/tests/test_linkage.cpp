#include "doctest.h"

#include "nilcoh/linkage.hpp"

using namespace nilcoh;

TEST_CASE("alcove membership")
{
    for (const std::string label : {"A1", "A2", "B2", "G2", "A3"}) {
        const RootSystem rs = RootSystem::build(label);
        const int h = rs.coxeter_number();
        CHECK(in_alcove(rs, IntVector::Zero(rs.rank()), h, false));
        CHECK(in_alcove(rs, IntVector::Zero(rs.rank()), h - 1, true));
        CHECK_FALSE(in_alcove(rs, IntVector::Zero(rs.rank()), h - 1, false));
    }
    const RootSystem a2 = RootSystem::build("A2");
    CHECK(in_alcove(a2, make_vector({2, 1}), 5, true));
    CHECK_FALSE(in_alcove(a2, make_vector({2, 1}), 5, false));
    const RootSystem a1 = RootSystem::build("A1");
    CHECK_FALSE(in_alcove(a1, make_vector({5}), 5, true));
    CHECK(in_alcove(a1, make_vector({4}), 5, true));
    CHECK_FALSE(in_alcove(a1, make_vector({-1}), 5, true));
}

TEST_CASE("J-restricted weights")
{
    const RootSystem a2 = RootSystem::build("A2");
    for (const std::vector<int>& J : {std::vector<int>{}, {0}, {1}, {0, 1}})
        CHECK(j_restricted(a2, IntVector::Zero(2), J, 5));
    CHECK(j_restricted(a2, make_vector({-7, 30}), {}, 5));
    CHECK(j_restricted(a2, make_vector({2, 1}), {0, 1}, 5));
    CHECK_FALSE(j_restricted(a2, make_vector({5, 0}), {0, 1}, 5));
    CHECK_FALSE(j_restricted(a2, make_vector({-1, 0}), {0}, 5));
    CHECK(j_restricted(a2, make_vector({1, -3}), {0}, 5));
}

TEST_CASE("weak linkage examples")
{
    const auto W1 = WeylGroup::enumerate(RootSystem::build("A1"));
    const auto zero = weak_linkage(W1, make_vector({0}), 5);
    REQUIRE(zero.has_value());
    CHECK(zero->w == W1.identity());
    CHECK(zero->sigma == make_vector({0}));

    const auto d = weak_linkage(W1, make_vector({3}), 5);
    REQUIRE(d.has_value());
    CHECK(W1[d->w].name() == "s1");
    CHECK(d->sigma == make_vector({1}));

    const auto W2 = WeylGroup::enumerate(RootSystem::build("A2"));
    CHECK_FALSE(weak_linkage(W2, make_vector({1, 0}), 5).has_value());

    CHECK_THROWS_AS(weak_linkage(W2, make_vector({0, 0}), 3), PreconditionError);
    CHECK_THROWS_AS(weak_linkage(W2, make_vector({4, 4}), 5), PreconditionError);
}

TEST_CASE("weak linkage round trip and minuscule sigma")
{
    for (const std::string label : {"A1", "A2", "B2", "A3", "G2"}) {
        CAPTURE(label);
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        const auto minuscule = rs.minuscule_weights();
        for (long long p : {7LL, 11LL, 13LL}) {
            if (p <= rs.coxeter_number())
                continue;
            // Dominant weights in the closed alcove: coordinates bounded by p.
            IntVector lambda = IntVector::Zero(rs.rank());
            for (;;) {
                if (in_alcove(rs, lambda, p, true)) {
                    const auto d = weak_linkage(W, lambda, p);
                    if (d) {
                        CHECK(dot(W[d->w], IntVector::Zero(rs.rank()), rs) + static_cast<int>(p) * d->sigma
                            == lambda);
                        const bool ok = d->sigma.isZero()
                            || std::find(minuscule.begin(), minuscule.end(), d->sigma) != minuscule.end();
                        CHECK(ok);
                    }
                }
                int i = 0;
                while (i < rs.rank() && lambda[i] == p) {
                    lambda[i] = 0;
                    ++i;
                }
                if (i == rs.rank())
                    break;
                ++lambda[i];
            }
        }
    }
}

TEST_CASE("admissibility gates")
{
    const RootSystem a2 = RootSystem::build("A2");
    const RootSystem b2 = RootSystem::build("B2");
    const RootSystem g2 = RootSystem::build("G2");
    const RootSystem e6 = RootSystem::build("E6");

    const GateResult sep = admissibility(a2, 9, GateContext::weight_separation);
    CHECK_FALSE(sep.pass);
    REQUIRE(sep.failed.size() == 1);
    CHECK(sep.failed[0] == "coprime_connection");
    CHECK(admissibility(a2, 9, GateContext::base).pass);

    const GateResult g = admissibility(g2, 9, GateContext::base);
    CHECK_FALSE(g.pass);
    CHECK(g.failed == std::vector<std::string>{"coprime_base"});

    CHECK(admissibility(b2, 7, GateContext::ring).pass);
    CHECK_FALSE(admissibility(b2, 5, GateContext::ring).pass);
    CHECK_FALSE(admissibility(b2, 8, GateContext::base).pass);
    CHECK(admissibility(b2, 3, GateContext::kostant).pass);
    CHECK_FALSE(admissibility(e6, 9, GateContext::weight_separation).pass);
    CHECK(admissibility(e6, 9, GateContext::base).pass);

    CHECK_THROWS_AS(require_admissible(g2, 9, GateContext::base), PreconditionError);
    CHECK_NOTHROW(require_admissible(a2, 7, GateContext::ring));
    CHECK_THROWS_AS(parse_gate_context("bogus"), PreconditionError);
    CHECK(parse_gate_context("weight-separation") == GateContext::weight_separation);
}

TEST_CASE("dot collisions in the open alcove")
{
    // For lambda in C_Z, w1.lambda - w2.lambda in p Z Phi forces w1 = w2.
    for (const std::string label : {"A2", "B2", "A3"}) {
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        for (long long p : {5LL, 7LL, 11LL, 13LL}) {
            if (p <= rs.coxeter_number())
                continue;
            IntVector lambda = IntVector::Zero(rs.rank());
            for (;;) {
                if (in_alcove(rs, lambda, p, false)) {
                    for (std::size_t a = 0; a < W.size(); ++a) {
                        for (std::size_t b = 0; b < W.size(); ++b) {
                            if (a == b)
                                continue;
                            const auto diff = rs.to_root_coords(dot(W[a], lambda, rs) - dot(W[b], lambda, rs));
                            REQUIRE(diff.has_value());
                            bool divisible = true;
                            for (int i = 0; i < rs.rank(); ++i)
                                divisible = divisible && (*diff)[i] % p == 0;
                            CHECK_FALSE(divisible);
                        }
                    }
                }
                int i = 0;
                while (i < rs.rank() && lambda[i] == p) {
                    lambda[i] = 0;
                    ++i;
                }
                if (i == rs.rank())
                    break;
                ++lambda[i];
            }
        }
    }
}
