// Acceptance run: one PASS/FAIL line per criterion.

#include "nilcoh/koszul.hpp"
#include "nilcoh/restricted_ext.hpp"
#include "nilcoh/ring.hpp"
#include "nilcoh/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace nilcoh;

namespace {

struct Criterion {
    bool ok = true;
    std::ostringstream notes;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok)
                notes << "failed: ";
            else
                notes << "; ";
            notes << what;
            ok = false;
        }
    }
};

std::vector<std::vector<int>> subsets(int n)
{
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1)
                J.push_back(i);
        }
        out.push_back(J);
    }
    return out;
}

// Calls f on every dominant lambda with coordinates in [0, bound].
void for_each_box(int rank, int bound, const std::function<void(const IntVector&)>& f)
{
    IntVector lambda = IntVector::Zero(rank);
    for (;;) {
        f(lambda);
        int i = 0;
        while (i < rank && lambda[i] == bound) {
            lambda[i] = 0;
            ++i;
        }
        if (i == rank)
            return;
        ++lambda[i];
    }
}

void kostant_vs_oracle(Criterion& c)
{
    const std::vector<std::pair<std::string, long long>> cases{{"A2", 5}, {"A3", 5}, {"B2", 5}, {"G2", 7}};
    int compared = 0;
    for (const auto& [label, p] : cases) {
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        for (const auto& J : subsets(rs.rank())) {
            const auto oracle = cohomology(rs, J, FieldSpec{p});
            const auto k = kostant_decomposition(W, IntVector::Zero(rs.rank()), J, Mode::modular(p)).character(rs);
            c.require(oracle == k, label + " J of size " + std::to_string(J.size()));
            ++compared;
        }
    }
    c.notes << (c.ok ? "" : "; ") << compared << " (type, p, J) cases";
}

void sum_dot(Criterion& c)
{
    const std::vector<std::pair<std::string, long long>> empty{{"A2", 5}, {"A3", 7}, {"B2", 7}, {"G2", 13}};
    for (const auto& [label, p] : empty) {
        const auto W = WeylGroup::enumerate(RootSystem::build(label));
        c.require(search_sum_dot(W, p).empty(), label + " p=" + std::to_string(p) + " not empty");
    }
    const RootSystem b2 = RootSystem::build("B2");
    const auto W = WeylGroup::enumerate(b2);
    const auto vs = search_sum_dot(W, 5);
    const std::size_t ba = W.from_word({1, 0});
    const std::size_t ab = W.from_word({0, 1});
    const IntVector minus_beta = -b2.to_weight(make_vector({0, 1}));
    const bool witness = std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
        return v.elements == std::vector<std::size_t>{ba, ba, ab} && v.sigma == minus_beta;
    });
    c.require(witness, "B2 p=5 witness missing");
    c.require(std::all_of(vs.begin(), vs.end(), [&](const Violation& v) {
        return revalidate(b2, v, SigmaDomain::root_lattice);
    }), "revalidation");
    c.notes << (c.ok ? "" : "; ") << "B2 p=5 has " << vs.size() << " violations";
}

void dot_collisions(Criterion& c)
{
    int weights = 0;
    for (const std::string label : {"A2", "B2"}) {
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        for (long long p : {5LL, 7LL}) {
            for_each_box(rs.rank(), static_cast<int>(p), [&](const IntVector& lambda) {
                if (!in_alcove(rs, lambda, p, false))
                    return;
                ++weights;
                c.require(search_dot_collisions(W, lambda, Mode::modular(p), SigmaDomain::root_lattice).empty(),
                    label + " lambda=" + format_vector(lambda));
            });
        }
    }
    const RootSystem a2 = RootSystem::build("A2");
    const auto W = WeylGroup::enumerate(a2);
    const auto vs = search_dot_collisions(W, make_vector({2, 1}), Mode::modular(5), SigmaDomain::root_lattice);
    const IntVector sigma = -a2.to_weight(make_vector({1, 1}));
    c.require(std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
        return v.elements == std::vector<std::size_t>{W.longest(), W.identity()} && v.sigma == sigma;
    }), "boundary violation at A2 p=5 lambda=2,1 missing");
    c.notes << (c.ok ? "" : "; ") << weights << " alcove weights scanned";
}

void bigraded(Criterion& c)
{
    const auto W = WeylGroup::enumerate(RootSystem::build("B2"));
    const auto f = frobenius_kernel_character(W, IntVector::Zero(2), {}, Mode::modular(5), 4).collapse();
    c.require(poincare(f) == std::vector<long long>{1, 2, 6, 10, 19}, "dims " + format_poincare(poincare(f)));
    c.notes << (c.ok ? "" : "; ") << "dims " << format_poincare(poincare(f));
}

void restricted(Criterion& c)
{
    const RootSystem b2 = RootSystem::build("B2");
    const auto W = WeylGroup::enumerate(b2);
    const auto A = RestrictedAlgebra::build(b2, {}, 5);
    const auto res = MinimalResolution::compute(A, 4);
    c.require(res.dims() == std::vector<long long>{1, 2, 6, 10, 19}, "dims");
    c.require(res.check_complex(), "d^2 = 0");
    const auto f = frobenius_kernel_character(W, IntVector::Zero(2), {}, Mode::modular(5), 4).collapse();
    c.require(res.character() == f, "weights differ from the bigraded character");
    // z spans H^2 in weight (s_beta s_alpha) . 0 = -alpha - 3 beta.
    const IntVector zw = -*b2.to_root_coords(dot(W[W.from_word({1, 0})], IntVector::Zero(2), b2));
    c.require(zw == make_vector({1, 3}), "weight of z");
    const auto gens = res.generators_of_weight(2, zw);
    c.require(gens.size() == 1, "H^2 weight space of z is not one-dimensional");
    if (gens.size() == 1) {
        const ExtClass z{2, {{gens[0], 1}}};
        const bool nonzero = !yoneda_product(res, z, z).is_zero();
        c.require(nonzero, "z^2 = 0");
        c.notes << (c.ok ? "" : "; ") << "z^2 " << (nonzero ? "nonzero" : "zero");
    }
}

using Product = std::optional<NilProduct>;

Product times(const NilRing& ring, const Product& x, std::size_t w, int ell)
{
    if (!x)
        return std::nullopt;
    const auto y = ell == 1 ? ring.nil_product(x->w, w) : ring.quantum_nil_product(x->w, w, ell, true);
    if (!y)
        return std::nullopt;
    return NilProduct{x->scalar * y->scalar, y->w};
}

Product times(const NilRing& ring, std::size_t w, const Product& x, int ell)
{
    if (!x)
        return std::nullopt;
    const auto y = ell == 1 ? ring.nil_product(w, x->w) : ring.quantum_nil_product(w, x->w, ell, true);
    if (!y)
        return std::nullopt;
    return NilProduct{x->scalar * y->scalar, y->w};
}

bool same(const Product& a, const Product& b)
{
    if (!a || !b)
        return !a && !b;
    return a->w == b->w && a->scalar == b->scalar;
}

void ring_laws(Criterion& c)
{
    for (const std::string label : {"A2", "B2", "A3"}) {
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        for (const auto& J : subsets(rs.rank())) {
            const NilRing ring(W, J);
            const CEComplex cx = CEComplex::build(rs, J);
            bool assoc = true, comm = true, cup = true, odd = true;
            for (std::size_t a : ring.reps()) {
                if (W[a].length() % 2 == 1 && ring.nil_product(a, a))
                    odd = false;
                for (std::size_t b : ring.reps()) {
                    const auto ab = ring.nil_product(a, b);
                    const auto ba = ring.nil_product(b, a);
                    const int sign = (W[a].length() * W[b].length()) % 2 ? -1 : 1;
                    if (ab.has_value() != ba.has_value() || (ab && (ab->w != ba->w || ab->scalar.sign != sign * ba->scalar.sign)))
                        comm = false;
                    const auto cc = cochain_cup(cx, W, a, b, FieldSpec{7});
                    if (ab ? (cc.coefficient != ab->scalar.sign || cc.target != ab->w) : cc.coefficient != 0)
                        cup = false;
                    for (std::size_t d : ring.reps()) {
                        if (!same(times(ring, ab, d, 1), times(ring, a, ring.nil_product(b, d), 1)))
                            assoc = false;
                    }
                }
            }
            const std::string where = label + " J of size " + std::to_string(J.size());
            c.require(assoc, "associativity " + where);
            c.require(comm, "graded commutativity " + where);
            c.require(cup, "cochain cup " + where);
            c.require(odd, "odd squares " + where);
        }
    }

    std::mt19937 rng(2024);
    for (const std::string label : {"A2", "B2"}) {
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        const int N = rs.num_positive();
        for (int ell : {5, 7}) {
            long long basis = 0;
            bool confluent = true, special = true;
            for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
                std::vector<int> m;
                for (int k = 0; k < N; ++k) {
                    if (mask >> k & 1)
                        m.push_back(k);
                }
                const auto fixed = quantum_exterior_straighten(rs, m, ell);
                if (fixed && fixed->monomial == m && fixed->scalar == CycScalar::one(ell))
                    ++basis;
                std::vector<int> perm = m;
                do {
                    const auto bubble = quantum_exterior_straighten(rs, perm, ell);
                    for (int trial = 0; trial < 4; ++trial) {
                        std::vector<std::size_t> order(12);
                        for (auto& o : order)
                            o = rng();
                        const auto other = quantum_exterior_straighten(rs, perm, ell, order);
                        if (!bubble || !other || other->monomial != bubble->monomial || !(other->scalar == bubble->scalar))
                            confluent = false;
                    }
                    const auto classical = quantum_exterior_straighten(rs, perm, 1);
                    if (!bubble || !classical || classical->scalar.sign != bubble->scalar.sign)
                        special = false;
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
            const NilRing ring(W, {});
            for (std::size_t a : ring.reps()) {
                for (std::size_t b : ring.reps()) {
                    const auto q = ring.quantum_nil_product(a, b, ell, true);
                    const auto cl = ring.nil_product(a, b);
                    if (q.has_value() != cl.has_value() || (q && (q->w != cl->w || q->scalar.sign != cl->scalar.sign)))
                        special = false;
                    for (std::size_t d : ring.reps()) {
                        if (!same(times(ring, q, d, ell), times(ring, a, ring.quantum_nil_product(b, d, ell, true), ell)))
                            confluent = false;
                    }
                }
            }
            const std::string where = label + " l=" + std::to_string(ell);
            c.require(confluent, "confluence " + where);
            c.require(basis == (1LL << N), "basis count " + where);
            c.require(special, "specialization " + where);
        }
    }
    c.notes << (c.ok ? "" : "; ") << "classical A2, B2, A3 over all J; quantum A2, B2 at l=5,7";
}

void parabolic(Criterion& c)
{
    const long long p = 5;
    const int D = 6;
    int cases = 0;
    for (const std::string label : {"A1", "A2"}) {
        const RootSystem rs = RootSystem::build(label);
        const auto W = WeylGroup::enumerate(rs);
        const auto sym = symmetric_characters(rs, nilradical_roots(rs, {}), D);
        for_each_box(rs.rank(), static_cast<int>(p), [&](const IntVector& lambda) {
            if (!in_alcove(rs, lambda, p, true))
                return;
            const auto datum = weak_linkage(W, lambda, p);
            if (!datum)
                return;
            ++cases;
            const IntVector shift = W[W.inverse(datum->w)].apply(datum->sigma);
            const int lw = W[datum->w].length();
            const auto par = parabolic_character(W, lambda, {}, Mode::modular(p), D);
            const std::string where = label + " lambda=" + format_vector(lambda);
            for (int j = 0; j <= D; ++j) {
                FormalCharacter expected;
                if (j >= lw && (j - lw) % 2 == 0)
                    expected = sym[static_cast<std::size_t>((j - lw) / 2)] * FormalCharacter::point(shift);
                c.require(par[static_cast<std::size_t>(j)] == expected,
                    "parabolic degree " + std::to_string(j) + " " + where);
            }
            const auto t1 = t1_invariants(W, lambda, p);
            for (std::size_t j = 0; j < t1.size(); ++j) {
                const FormalCharacter expected = static_cast<int>(j) == lw ? FormalCharacter::point(shift) : FormalCharacter();
                c.require(t1[j] == expected, "T1 invariants degree " + std::to_string(j) + " " + where);
            }
        });
    }
    c.notes << (c.ok ? "" : "; ") << cases << " linked weights";
}

void quantum_modular(Criterion& c)
{
    const RootSystem a2 = RootSystem::build("A2");
    const auto W = WeylGroup::enumerate(a2);
    int cases = 0;
    for (const auto& J : subsets(2)) {
        for_each_box(2, 7, [&](const IntVector& lambda) {
            if (!in_alcove(a2, lambda, 7, true))
                return;
            const auto km = kostant_decomposition(W, lambda, J, Mode::modular(7));
            const auto kq = kostant_decomposition(W, lambda, J, Mode::quantum(7));
            bool same_entries = km.entries.size() == kq.entries.size();
            for (std::size_t k = 0; same_entries && k < km.entries.size(); ++k)
                same_entries = km.entries[k].w == kq.entries[k].w
                    && km.entries[k].highest_weight == kq.entries[k].highest_weight;
            c.require(same_entries && km.character(a2) == kq.character(a2), "Kostant at " + format_vector(lambda));
            if (in_alcove(a2, lambda, 7, false)) {
                const auto fm = frobenius_kernel_character(W, lambda, J, Mode::modular(7), 6).collapse();
                const auto fq = frobenius_kernel_character(W, lambda, J, Mode::quantum(7), 6).collapse();
                c.require(fm == fq, "kernel character at " + format_vector(lambda));
            }
            ++cases;
        });
    }
    c.require(!admissibility(a2, 9, GateContext::weight_separation).pass, "A2 l=9 weight separation accepted");
    c.require(!admissibility(RootSystem::build("G2"), 9, GateContext::base).pass, "G2 l=9 base accepted");
    c.notes << (c.ok ? "" : "; ") << cases << " (J, lambda) cases";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"Kostant decomposition equals the Koszul oracle", kostant_vs_oracle},
        {"sum-dot search sharpness", sum_dot},
        {"dot-collision search", dot_collisions},
        {"bigraded character of B2 at p=5", bigraded},
        {"restricted Ext of B2 at p=5", restricted},
        {"ring laws", ring_laws},
        {"parabolic consistency", parabolic},
        {"quantum/modular agreement and gates", quantum_modular},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Criterion c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[k].second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes << "exception: " << e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
                  << c.notes.str() << "; " << static_cast<long long>(ms) << " ms)\n";
        if (!c.ok)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
