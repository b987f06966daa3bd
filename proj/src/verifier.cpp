#include "nilcoh/verifier.hpp"

#include "nilcoh/koszul.hpp"
#include "nilcoh/restricted_ext.hpp"
#include "nilcoh/ring.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace nilcoh {

namespace {

bool divisible(const IntVector& v, long long m)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] % m != 0)
            return false;
    }
    return true;
}

IntVector divided(const IntVector& v, long long m)
{
    IntVector out = v;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out[i] = static_cast<int>(v[i] / m);
    return out;
}

bool violation_less(const Violation& a, const Violation& b)
{
    if (a.elements != b.elements)
        return a.elements < b.elements;
    for (std::size_t k = 0; k < std::min(a.weights.size(), b.weights.size()); ++k) {
        if (a.weights[k] != b.weights[k])
            return LexLess{}(a.weights[k], b.weights[k]);
    }
    return LexLess{}(a.sigma, b.sigma);
}

unsigned thread_count(const SearchOptions& options, std::size_t work)
{
    unsigned n = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

// Runs body(i, out) for i in [0, n) on a strided partition and merges sorted.
std::vector<Violation> parallel_scan(std::size_t n, const SearchOptions& options,
    const std::function<void(std::size_t, std::vector<Violation>&)>& body)
{
    const unsigned t = thread_count(options, n);
    std::vector<std::vector<Violation>> parts(t);
    if (t == 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i, parts[0]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned k = 0; k < t; ++k) {
            workers.emplace_back([&, k] {
                for (std::size_t i = k; i < n; i += t)
                    body(i, parts[k]);
            });
        }
        for (auto& w : workers)
            w.join();
    }
    std::vector<Violation> out;
    for (auto& p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(out.begin(), out.end(), violation_less);
    return out;
}

void check_budget(unsigned long long tuples, const SearchOptions& options)
{
    if (tuples > options.budget)
        throw BudgetError(std::to_string(tuples) + " tuples exceed the search budget of " + std::to_string(options.budget));
}

void require_modulus(long long m)
{
    if (m < 2)
        throw PreconditionError("modulus must be at least 2");
}

} // namespace

std::string to_string(SigmaDomain d)
{
    return d == SigmaDomain::root_lattice ? "ZPhi" : "X";
}

SigmaDomain parse_sigma_domain(const std::string& name)
{
    if (name == "ZPhi" || name == "root" || name == "root-lattice")
        return SigmaDomain::root_lattice;
    if (name == "X" || name == "weight" || name == "weight-lattice")
        return SigmaDomain::weight_lattice;
    throw PreconditionError("unknown sigma domain '" + name + "'");
}

std::vector<Violation> search_sum_dot(const WeylGroup& W, long long p, const SearchOptions& options)
{
    require_modulus(p);
    const RootSystem& rs = W.root_system();
    const std::size_t n = W.size();
    check_budget(static_cast<unsigned long long>(n) * n * n, options);
    std::vector<IntVector> dots(n);
    std::vector<IntVector> roots(n);
    for (std::size_t w = 0; w < n; ++w) {
        dots[w] = dot(W[w], IntVector::Zero(rs.rank()), rs);
        roots[w] = *rs.to_root_coords(dots[w]);
    }
    return parallel_scan(n, options, [&](std::size_t a, std::vector<Violation>& out) {
        for (std::size_t b = 0; b < n; ++b) {
            const IntVector ab = roots[a] + roots[b];
            for (std::size_t c = 0; c < n; ++c) {
                const IntVector diff = ab - roots[c];
                if (diff.isZero() || !divisible(diff, p))
                    continue;
                out.push_back(Violation{{a, b, c}, {dots[a], dots[b], dots[c]}, rs.to_weight(divided(diff, p)), p});
            }
        }
    });
}

std::vector<Violation> search_levi_weights(const WeylGroup& W, const std::vector<int>& J, long long p,
    const SearchOptions& options)
{
    require_modulus(p);
    const RootSystem& rs = W.root_system();
    std::vector<std::pair<std::size_t, IntVector>> support;
    for (std::size_t w : min_coset_reps(W, J).reps) {
        const auto chi = levi_simple_character(rs, dot(W[w], IntVector::Zero(rs.rank()), rs), J);
        for (const auto& [mu, m] : chi)
            support.emplace_back(w, mu);
    }
    const std::size_t n = support.size();
    check_budget(static_cast<unsigned long long>(n) * n * n, options);
    std::vector<IntVector> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = rs.to_root_coords(support[i].second);
        if (!r)
            throw InternalError("Levi weight outside the root lattice");
        roots[i] = *r;
    }
    return parallel_scan(n, options, [&](std::size_t a, std::vector<Violation>& out) {
        for (std::size_t b = 0; b < n; ++b) {
            const IntVector ab = roots[a] + roots[b];
            for (std::size_t c = 0; c < n; ++c) {
                const IntVector diff = ab - roots[c];
                if (diff.isZero() || !divisible(diff, p))
                    continue;
                out.push_back(Violation{{support[a].first, support[b].first, support[c].first},
                    {support[a].second, support[b].second, support[c].second}, rs.to_weight(divided(diff, p)), p});
            }
        }
    });
}

std::vector<Violation> search_dot_collisions(const WeylGroup& W, const IntVector& lambda, const Mode& mode,
    SigmaDomain domain, const SearchOptions& options)
{
    const RootSystem& rs = W.root_system();
    if (mode.kind == Mode::Kind::classical)
        throw PreconditionError("dot collisions need a modulus");
    require_modulus(mode.modulus);
    if (mode.kind == Mode::Kind::quantum)
        require_admissible(rs, mode.modulus, GateContext::weight_separation);
    if (lambda.size() != rs.rank())
        throw PreconditionError("weight has the wrong rank");
    const std::size_t n = W.size();
    check_budget(static_cast<unsigned long long>(n) * n, options);
    const long long m = mode.modulus;
    std::vector<IntVector> dots(n);
    for (std::size_t w = 0; w < n; ++w)
        dots[w] = dot(W[w], lambda, rs);
    return parallel_scan(n, options, [&](std::size_t a, std::vector<Violation>& out) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
                continue;
            const IntVector diff = dots[a] - dots[b];
            IntVector sigma;
            if (domain == SigmaDomain::root_lattice) {
                const auto r = rs.to_root_coords(diff);
                if (!r || !divisible(*r, m))
                    continue;
                sigma = rs.to_weight(divided(*r, m));
            } else {
                if (!divisible(diff, m))
                    continue;
                sigma = divided(diff, m);
            }
            out.push_back(Violation{{a, b}, {dots[a], dots[b]}, sigma, m});
        }
    });
}

bool revalidate(const RootSystem& rs, const Violation& v, SigmaDomain domain)
{
    if (v.sigma.isZero())
        return false;
    if (domain == SigmaDomain::root_lattice && !rs.in_root_lattice(v.sigma))
        return false;
    const IntVector shift = static_cast<int>(v.modulus) * v.sigma;
    if (v.weights.size() == 3)
        return v.weights[0] + v.weights[1] == v.weights[2] + shift;
    if (v.weights.size() == 2)
        return v.weights[0] == v.weights[1] + shift;
    return false;
}

std::string to_string(CheckResult::Status s)
{
    switch (s) {
    case CheckResult::Status::pass:
        return "pass";
    case CheckResult::Status::fail:
        return "fail";
    case CheckResult::Status::skipped:
        return "skipped";
    }
    return "?";
}

bool SuiteReport::pass() const
{
    return std::none_of(checks.begin(), checks.end(),
        [](const CheckResult& c) { return c.status == CheckResult::Status::fail; });
}

namespace {

std::vector<std::vector<int>> all_subsets(int n)
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

std::string format_subset(const std::vector<int>& J)
{
    std::string s = "{";
    for (std::size_t k = 0; k < J.size(); ++k)
        s += (k ? "," : "") + std::to_string(J[k]);
    return s + "}";
}

CheckResult kostant_vs_oracle(const WeylGroup& W, long long p)
{
    const RootSystem& rs = W.root_system();
    CheckResult r{"kostant_vs_oracle", CheckResult::Status::pass, ""};
    if (!is_prime(p) || p < rs.coxeter_number() - 1) {
        r.status = CheckResult::Status::skipped;
        r.detail = "needs p prime with p >= h-1";
        return r;
    }
    int compared = 0;
    for (const auto& J : all_subsets(rs.rank())) {
        CEComplex cx;
        try {
            cx = CEComplex::build(rs, J);
        } catch (const BudgetError&) {
            continue;
        }
        const auto oracle = cohomology(cx, FieldSpec{p});
        const auto kostant = kostant_decomposition(W, IntVector::Zero(rs.rank()), J, Mode::modular(p)).character(rs);
        ++compared;
        if (oracle != kostant) {
            r.status = CheckResult::Status::fail;
            r.detail += "mismatch at J=" + format_subset(J) + "; ";
        }
    }
    if (r.status == CheckResult::Status::pass)
        r.detail = std::to_string(compared) + " parabolics compared";
    return r;
}

CheckResult ring_signs(const WeylGroup& W, long long p)
{
    const RootSystem& rs = W.root_system();
    CheckResult r{"ring_signs_vs_cochain_cup", CheckResult::Status::pass, ""};
    if (!is_prime(p) || p == 2 || p < rs.coxeter_number() - 1) {
        r.status = CheckResult::Status::skipped;
        r.detail = "needs an odd prime p >= h-1";
        return r;
    }
    long long pairs = 0;
    for (const auto& J : all_subsets(rs.rank())) {
        CEComplex cx;
        try {
            cx = CEComplex::build(rs, J);
        } catch (const BudgetError&) {
            continue;
        }
        const NilRing ring(W, J);
        for (std::size_t a : ring.reps()) {
            for (std::size_t b : ring.reps()) {
                const auto nil = ring.nil_product(a, b);
                const auto cup = cochain_cup(cx, W, a, b, FieldSpec{p});
                ++pairs;
                const bool agree = nil ? (cup.coefficient == nil->scalar.sign && cup.target == nil->w)
                                       : cup.coefficient == 0;
                if (!agree) {
                    r.status = CheckResult::Status::fail;
                    r.detail += W[a].name() + " x " + W[b].name() + " at J=" + format_subset(J) + "; ";
                }
            }
        }
    }
    if (r.status == CheckResult::Status::pass)
        r.detail = std::to_string(pairs) + " pairs compared";
    return r;
}

struct FormalIndex {
    // (degree, weight) -> basis classes of the formal tensor ring
    std::map<std::pair<int, IntVector>, std::vector<BasisClass>, BlockKeyLess> classes;
};

FormalIndex formal_classes(const NilRing& ring, long long p, int max_degree)
{
    FormalIndex idx;
    const std::size_t N = ring.nilradical().size();
    std::vector<int> s(N, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int used) {
        if (k == N) {
            for (std::size_t w : ring.reps()) {
                const BasisClass c{s, w};
                const int d = degree(ring, c);
                if (d <= max_degree)
                    idx.classes[{d, weight(ring, c, static_cast<int>(p))}].push_back(c);
            }
            return;
        }
        for (int e = 0; 2 * (used + e) <= max_degree; ++e) {
            s[k] = e;
            rec(k + 1, used + e);
        }
        s[k] = 0;
    };
    rec(0, 0);
    return idx;
}

} // namespace

SuiteReport consistency_suite(const WeylGroup& W, long long p, int max_degree)
{
    const RootSystem& rs = W.root_system();
    SuiteReport report;
    report.type = rs.label();
    report.modulus = p;
    report.checks.push_back(kostant_vs_oracle(W, p));
    report.checks.push_back(ring_signs(W, p));

    CheckResult ext{"ext_vs_bigraded_character", CheckResult::Status::pass, ""};
    CheckResult identity{"ring_identity", CheckResult::Status::pass, ""};
    std::optional<RestrictedAlgebra> algebra;
    std::optional<MinimalResolution> res;
    if (!is_prime(p) || p < rs.coxeter_number()) {
        ext.status = CheckResult::Status::skipped;
        ext.detail = "needs p prime with 0 in C_Z (p >= h)";
    } else {
        try {
            algebra.emplace(RestrictedAlgebra::build(rs, {}, p));
        } catch (const BudgetError& e) {
            ext.status = CheckResult::Status::skipped;
            ext.detail = e.what();
        }
    }
    if (algebra) {
        res.emplace(MinimalResolution::compute(*algebra, max_degree));
        const auto expected = frobenius_kernel_character(W, IntVector::Zero(rs.rank()), {}, Mode::modular(p),
            max_degree).collapse();
        if (res->character() == expected && res->check_complex()) {
            std::string dims;
            for (long long d : res->dims())
                dims += (dims.empty() ? "" : ",") + std::to_string(d);
            ext.detail = "dims " + dims;
        } else {
            ext.status = CheckResult::Status::fail;
            ext.detail = "resolution character differs from the bigraded character";
        }
    }
    report.checks.push_back(ext);

    const NilRing ring(W, {});
    const std::string violation = full_ring_bound_violation(ring, Mode::modular(p));
    if (res && ext.status == CheckResult::Status::pass) {
        const FormalIndex formal = formal_classes(ring, p, max_degree);
        const ProductOptions opts{Mode::modular(p), true};
        // Ext generators sorted into one-dimensional weight spaces.
        std::map<std::pair<int, IntVector>, std::vector<std::size_t>, BlockKeyLess> ext_spaces;
        for (int n = 0; n <= max_degree; ++n) {
            for (std::size_t g = 0; g < res->stage(n).size(); ++g)
                ext_spaces[{n, res->stage(n)[g].weight}].push_back(g);
        }
        auto formal_of = [&](int n, const IntVector& root_weight) -> const std::vector<BasisClass>* {
            auto it = formal.classes.find({n, -rs.to_weight(root_weight)});
            return it == formal.classes.end() ? nullptr : &it->second;
        };
        long long compared = 0;
        std::string mismatches;
        for (const auto& [kx, gx] : ext_spaces) {
            for (const auto& [ky, gy] : ext_spaces) {
                const int n = kx.first + ky.first;
                if (n > max_degree || kx.first == 0 || ky.first == 0 || gx.size() != 1 || gy.size() != 1)
                    continue;
                const IntVector target = kx.second + ky.second;
                auto tt = ext_spaces.find({n, target});
                if (tt != ext_spaces.end() && tt->second.size() > 1)
                    continue;
                const auto* fx = formal_of(kx.first, kx.second);
                const auto* fy = formal_of(ky.first, ky.second);
                if (!fx || !fy || fx->size() != 1 || fy->size() != 1)
                    continue;
                ExtClass x{kx.first, {{gx[0], 1}}};
                ExtClass y{ky.first, {{gy[0], 1}}};
                const bool ext_nonzero = !yoneda_product(*res, x, y).is_zero();
                const bool formal_nonzero = !full_product(ring, RingElement::basis(fx->front()),
                    RingElement::basis(fy->front()), opts).value.is_zero();
                ++compared;
                if (ext_nonzero != formal_nonzero) {
                    mismatches += "H^" + std::to_string(kx.first) + "(" + format_vector(-rs.to_weight(kx.second))
                        + ") x H^" + std::to_string(ky.first) + "(" + format_vector(-rs.to_weight(ky.second)) + "); ";
                    if (kx == ky && kx.first == 2 && ext_nonzero)
                        report.square_anomalies.push_back(-rs.to_weight(kx.second));
                }
            }
        }
        if (!violation.empty()) {
            identity.status = CheckResult::Status::skipped;
            identity.detail = "below the bound (" + violation + "); " + std::to_string(compared)
                + " products compared, formal model differs at: " + (mismatches.empty() ? "none" : mismatches);
        } else if (!mismatches.empty()) {
            identity.status = CheckResult::Status::fail;
            identity.detail = mismatches;
        } else {
            identity.detail = std::to_string(compared) + " products on one-dimensional weight spaces compared";
        }
    } else {
        identity.status = CheckResult::Status::skipped;
        identity.detail = !violation.empty() ? "below the bound (" + violation + ")" : "restricted Ext unavailable";
    }
    report.checks.push_back(identity);
    return report;
}

} // namespace nilcoh
