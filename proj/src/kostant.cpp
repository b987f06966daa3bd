#include "nilcoh/kostant.hpp"

#include <algorithm>

namespace nilcoh {

namespace {

void require_modulus(const Mode& mode)
{
    switch (mode.kind) {
    case Mode::Kind::classical:
        break;
    case Mode::Kind::modular:
        if (!is_prime(mode.modulus))
            throw PreconditionError("modular mode requires a prime p, got " + std::to_string(mode.modulus));
        break;
    case Mode::Kind::quantum:
        if (mode.modulus < 1)
            throw PreconditionError("quantum mode requires a positive l");
        break;
    }
}

void require_closed_alcove(const RootSystem& rs, const IntVector& lambda, long long m, bool closed)
{
    if (lambda.size() != rs.rank())
        throw PreconditionError("lambda has " + std::to_string(lambda.size()) + " coordinates, expected "
                                + std::to_string(rs.rank()));
    if (!rs.is_dominant(lambda) || !in_alcove(rs, lambda, m, closed))
        throw PreconditionError(std::string("lambda = ") + format_vector(lambda) + " is not in "
                                + (closed ? "X^+ cap closed C_Z" : "X^+ cap C_Z") + " for modulus "
                                + std::to_string(m));
}

std::vector<int> normalized(std::vector<int> J, const RootSystem& rs)
{
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    for (int j : J) {
        if (j < 0 || j >= rs.rank())
            throw PreconditionError("J contains an index outside the simple roots");
    }
    return J;
}

KostantDecomposition decompose(const WeylGroup& W, const IntVector& lambda, std::vector<int> J, const Mode& mode)
{
    const RootSystem& rs = W.root_system();
    KostantDecomposition d;
    d.mode = mode;
    d.J = std::move(J);
    d.lambda = lambda;
    d.top_degree = static_cast<int>(nilradical_roots(rs, d.J).size());
    for (std::size_t w : min_coset_reps(W, d.J).reps)
        d.entries.push_back({w, W[w].length(), dot(W[w], lambda, rs)});
    return d;
}

} // namespace

std::string Mode::name() const
{
    switch (kind) {
    case Kind::classical: return "classical";
    case Kind::modular: return "modular(p=" + std::to_string(modulus) + ")";
    case Kind::quantum: return "quantum(l=" + std::to_string(modulus) + ")";
    }
    return "?";
}

Mode::Kind parse_mode_kind(const std::string& name)
{
    if (name == "classical")
        return Mode::Kind::classical;
    if (name == "modular")
        return Mode::Kind::modular;
    if (name == "quantum")
        return Mode::Kind::quantum;
    throw PreconditionError("unknown mode: " + name);
}

GradedCharacter KostantDecomposition::character(const RootSystem& rs) const
{
    GradedCharacter out(static_cast<std::size_t>(top_degree) + 1);
    for (const KostantEntry& e : entries)
        out[static_cast<std::size_t>(e.degree)] += levi_simple_character(rs, e.highest_weight, J);
    return out;
}

KostantDecomposition kostant_decomposition(const WeylGroup& W, const IntVector& lambda, const std::vector<int>& J,
    const Mode& mode)
{
    const RootSystem& rs = W.root_system();
    require_modulus(mode);
    if (mode.kind == Mode::Kind::classical) {
        if (lambda.size() != rs.rank() || !rs.is_dominant(lambda))
            throw PreconditionError("lambda = " + format_vector(lambda) + " is not dominant");
    } else {
        if (mode.kind == Mode::Kind::modular && mode.modulus < rs.coxeter_number() - 1)
            throw PreconditionError("modular Kostant decomposition requires p >= h - 1");
        if (mode.kind == Mode::Kind::quantum)
            require_admissible(rs, mode.modulus, GateContext::kostant);
        require_closed_alcove(rs, lambda, mode.modulus, true);
    }

    return decompose(W, lambda, normalized(J, rs), mode);
}

GradedCharacter BigradedCharacter::collapse() const
{
    GradedCharacter out(degrees.size());
    for (std::size_t n = 0; n < degrees.size(); ++n) {
        for (const Slab& s : degrees[n])
            out[n] += s.character;
    }
    return out;
}

BigradedCharacter frobenius_kernel_character(const WeylGroup& W, const IntVector& lambda, const std::vector<int>& J,
    const Mode& mode, int max_degree)
{
    const RootSystem& rs = W.root_system();
    if (mode.kind == Mode::Kind::classical)
        throw PreconditionError("the Frobenius kernel character needs a modular or quantum mode");
    if (max_degree < 0)
        throw PreconditionError("max degree must be non-negative");
    require_modulus(mode);
    if (mode.kind == Mode::Kind::quantum) {
        require_admissible(rs, mode.modulus, GateContext::weight_separation);
        if (mode.modulus <= rs.coxeter_number())
            throw PreconditionError("quantum Frobenius kernel character requires l > h");
    }
    require_closed_alcove(rs, lambda, mode.modulus, false);

    const KostantDecomposition kd = decompose(W, lambda, normalized(J, rs), mode);
    const GradedCharacter h = kd.character(rs);

    const auto u_roots = nilradical_roots(rs, kd.J);
    const auto sym = symmetric_characters(rs, u_roots, max_degree / 2);
    BigradedCharacter b;
    b.mode = mode;
    b.J = kd.J;
    b.lambda = lambda;
    b.degrees.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        for (int i = 0; 2 * i <= n; ++i) {
            const int j = n - 2 * i;
            if (j > kd.top_degree)
                continue;
            Slab s;
            s.i = i;
            s.j = j;
            s.character = frobenius_twist(sym[static_cast<std::size_t>(i)], static_cast<int>(mode.modulus))
                * h[static_cast<std::size_t>(j)];
            b.degrees[static_cast<std::size_t>(n)].push_back(std::move(s));
        }
    }
    return b;
}

GradedCharacter t1_invariants(const WeylGroup& W, const IntVector& lambda, long long p)
{
    const RootSystem& rs = W.root_system();
    GradedCharacter out(static_cast<std::size_t>(rs.num_positive()) + 1);
    const auto datum = weak_linkage(W, lambda, p);
    if (!datum)
        return out;
    const WeylElement& w = W[datum->w];
    const WeylElement& w_inv = W[W.inverse(datum->w)];
    out[static_cast<std::size_t>(w.length())] = FormalCharacter::point(w_inv.apply(datum->sigma));
    return out;
}

GradedCharacter parabolic_character(const WeylGroup& W, const IntVector& lambda, const std::vector<int>& J,
    const Mode& mode, int max_degree)
{
    const RootSystem& rs = W.root_system();
    if (mode.kind == Mode::Kind::classical)
        throw PreconditionError("the parabolic character needs a modular or quantum mode");
    if (max_degree < 0)
        throw PreconditionError("max degree must be non-negative");
    require_modulus(mode);
    if (mode.kind == Mode::Kind::quantum)
        require_admissible(rs, mode.modulus, GateContext::weight_separation);
    const std::vector<int> JJ = normalized(J, rs);

    GradedCharacter out(static_cast<std::size_t>(max_degree) + 1);
    const auto datum = weak_linkage(W, lambda, mode.modulus);
    if (!datum)
        return out;
    const WeylElement& w = W[datum->w];
    const IntVector shift = W[W.inverse(datum->w)].apply(datum->sigma);

    std::vector<int> all(static_cast<std::size_t>(rs.num_positive()));
    for (int k = 0; k < rs.num_positive(); ++k)
        all[static_cast<std::size_t>(k)] = k;
    const int top = max_degree >= w.length() ? (max_degree - w.length()) / 2 : -1;
    if (top < 0)
        return out;
    const auto sym = symmetric_characters(rs, all, top);
    // Induction from the positive Borel: the Euler character of
    // ind(mu) is the standard Weyl-Euler character of w_{0,J} mu.
    const WeylElement& w0J = W[parabolic_longest(W, JJ)];
    for (int i = 0; i <= top; ++i) {
        const FormalCharacter inducing = sym[static_cast<std::size_t>(i)] * FormalCharacter::point(shift);
        out[static_cast<std::size_t>(w.length() + 2 * i)] = euler_induction(rs, apply_weyl(w0J, inducing), JJ);
    }
    return out;
}

} // namespace nilcoh
