#include "nilcoh/ring.hpp"

#include <algorithm>

namespace nilcoh {

namespace {

int mod(long long a, int m)
{
    const long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

CycScalar CycScalar::operator*(const CycScalar& o) const
{
    if (ell != o.ell)
        throw PreconditionError("scalars over different roots of unity");
    if (sign == 0 || o.sign == 0)
        return zero(ell);
    return {sign * o.sign, mod(static_cast<long long>(exponent) + o.exponent, ell), ell};
}

std::string CycScalar::to_string() const
{
    if (sign == 0)
        return "0";
    std::string s = sign < 0 ? "-" : "";
    if (exponent == 0)
        return s + "1";
    return s + "z" + (exponent == 1 ? "" : "^" + std::to_string(exponent));
}

std::optional<Straightened> quantum_exterior_straighten(const RootSystem& rs, const std::vector<int>& monomial,
    int ell, const std::vector<std::size_t>& swap_order)
{
    if (ell < 1)
        throw PreconditionError("l must be positive");
    require_admissible(rs, ell, GateContext::base);
    std::vector<int> m = monomial;
    CycScalar scalar = CycScalar::one(ell);
    for (std::size_t step = 0;; ++step) {
        std::vector<std::size_t> descents;
        for (std::size_t i = 0; i + 1 < m.size(); ++i) {
            if (m[i] == m[i + 1])
                return std::nullopt;
            if (m[i] > m[i + 1])
                descents.push_back(i);
        }
        if (descents.empty())
            break;
        const std::size_t pick = swap_order.empty() ? 0 : swap_order[step % swap_order.size()] % descents.size();
        const std::size_t i = descents[pick];
        const int a = m[i];
        const int b = m[i + 1];
        const int ip = rs.root_inner(rs.positive_root(a).coords, rs.positive_root(b).coords);
        scalar = scalar * CycScalar{-1, mod(ip, ell), ell};
        std::swap(m[i], m[i + 1]);
    }
    return Straightened{scalar, m};
}

std::optional<Straightened> quantum_exterior_straighten(const RootSystem& rs, const std::vector<int>& monomial,
    int ell)
{
    return quantum_exterior_straighten(rs, monomial, ell, {});
}

NilRing::NilRing(const WeylGroup& W, std::vector<int> J)
    : W_(&W)
    , J_(std::move(J))
{
    std::sort(J_.begin(), J_.end());
    reps_ = min_coset_reps(W, J_).reps;
    nilradical_ = nilradical_roots(W.root_system(), J_);
    for (std::size_t r : reps_) {
        auto inv = inversion_set(W[r], W.root_system());
        by_inversions_.emplace(inv, r);
        inversions_.emplace(r, std::move(inv));
    }
}

const std::vector<int>& NilRing::inversions(std::size_t w) const
{
    auto it = inversions_.find(w);
    if (it == inversions_.end())
        throw PreconditionError("element is not a minimal coset representative");
    return it->second;
}

std::optional<std::size_t> NilRing::element_with(const std::vector<int>& inversion_set) const
{
    auto it = by_inversions_.find(inversion_set);
    if (it == by_inversions_.end())
        return std::nullopt;
    return it->second;
}

std::optional<NilProduct> NilRing::nil_product(std::size_t w1, std::size_t w2) const
{
    const auto& a = inversions(w1);
    const auto& b = inversions(w2);
    std::vector<int> merged;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    if (merged.size() != a.size() + b.size())
        return std::nullopt;
    const auto target = element_with(merged);
    if (!target)
        return std::nullopt;
    // Parity of the permutation sorting the concatenation a | b.
    long long inversions_count = 0;
    for (int x : a)
        inversions_count += std::count_if(b.begin(), b.end(), [x](int y) { return y < x; });
    return NilProduct{CycScalar{inversions_count % 2 ? -1 : 1, 0, 1}, *target};
}

std::optional<NilProduct> NilRing::quantum_nil_product(std::size_t w1, std::size_t w2, int ell, bool unsafe) const
{
    if (!unsafe)
        require_admissible(root_system(), ell, GateContext::ring);
    std::vector<int> word = inversions(w1);
    const auto& b = inversions(w2);
    word.insert(word.end(), b.begin(), b.end());
    const auto s = quantum_exterior_straighten(root_system(), word, ell);
    if (!s)
        return std::nullopt;
    const auto target = element_with(s->monomial);
    if (!target)
        return std::nullopt;
    return NilProduct{s->scalar, *target};
}

int degree(const NilRing& ring, const BasisClass& c)
{
    int d = ring.weyl()[c.w].length();
    for (int e : c.s)
        d += 2 * e;
    return d;
}

IntVector weight(const NilRing& ring, const BasisClass& c, int modulus)
{
    const RootSystem& rs = ring.root_system();
    IntVector mu = dot(ring.weyl()[c.w], IntVector::Zero(rs.rank()), rs);
    for (std::size_t k = 0; k < c.s.size(); ++k)
        mu -= modulus * c.s[k] * rs.positive_root(ring.nilradical()[k]).weight;
    return mu;
}

RingElement RingElement::basis(const BasisClass& c, int ell)
{
    RingElement e;
    e.ell = ell;
    e.add(c, CycScalar::one(ell));
    return e;
}

RingElement RingElement::unit(const NilRing& ring, int ell)
{
    return basis(BasisClass{std::vector<int>(ring.nilradical().size(), 0), ring.weyl().identity()}, ell);
}

void RingElement::add(const BasisClass& c, const GroupRingCoeff& coeff)
{
    auto& slot = terms[c];
    if (slot.empty())
        slot.assign(static_cast<std::size_t>(ell), 0);
    for (std::size_t k = 0; k < slot.size(); ++k)
        slot[k] += coeff[k];
    if (std::all_of(slot.begin(), slot.end(), [](long long v) { return v == 0; }))
        terms.erase(c);
}

void RingElement::add(const BasisClass& c, const CycScalar& s)
{
    if (s.is_zero())
        return;
    GroupRingCoeff coeff(static_cast<std::size_t>(ell), 0);
    coeff[static_cast<std::size_t>(s.exponent)] = s.sign;
    add(c, coeff);
}

std::string full_ring_bound_violation(const NilRing& ring, const Mode& mode)
{
    const RootSystem& rs = ring.root_system();
    const long long h = rs.coxeter_number();
    switch (mode.kind) {
    case Mode::Kind::classical:
        return "the full ring needs a modular or quantum mode";
    case Mode::Kind::modular: {
        if (!is_prime(mode.modulus))
            return "p = " + std::to_string(mode.modulus) + " is not prime";
        const long long bound = ring.J().empty() ? 2 * (h - 1) : 3 * (h - 1);
        if (mode.modulus <= bound)
            return "p > " + std::string(ring.J().empty() ? "2(h-1) = " : "3(h-1) = ") + std::to_string(bound);
        return {};
    }
    case Mode::Kind::quantum: {
        const GateResult g = admissibility(rs, mode.modulus, GateContext::ring);
        if (g.pass)
            return {};
        std::string names;
        for (const auto& f : g.failed)
            names += (names.empty() ? "" : ", ") + f;
        return "ring admissibility: " + names;
    }
    }
    return {};
}

ProductResult full_product(const NilRing& ring, const RingElement& x, const RingElement& y,
    const ProductOptions& options)
{
    const std::string violation = full_ring_bound_violation(ring, options.mode);
    const bool quantum = options.mode.kind == Mode::Kind::quantum;
    const int ell = quantum ? static_cast<int>(options.mode.modulus) : 1;
    if (options.mode.kind == Mode::Kind::classical
        || (options.mode.kind == Mode::Kind::modular && !is_prime(options.mode.modulus)))
        throw PreconditionError(violation);
    if (!violation.empty() && !options.unsafe_below_bound)
        throw PreconditionError("full ring product below the bound: requires " + violation);
    if (x.ell != ell || y.ell != ell)
        throw PreconditionError("ring elements carry the wrong root of unity");

    ProductResult r;
    r.formal_model = !violation.empty();
    r.label = r.formal_model ? "formal model, not H^*(U_1,k)" : "H^*((U_J)_1,k)";
    r.value.ell = ell;
    for (const auto& [a, ca] : x.terms) {
        for (const auto& [b, cb] : y.terms) {
            const auto nil = quantum ? ring.quantum_nil_product(a.w, b.w, ell, true) : ring.nil_product(a.w, b.w);
            if (!nil)
                continue;
            BasisClass c;
            c.w = nil->w;
            c.s.resize(a.s.size());
            for (std::size_t k = 0; k < a.s.size(); ++k)
                c.s[k] = a.s[k] + b.s[k];
            // (sum ca_i z^i)(sum cb_j z^j) * scalar
            GroupRingCoeff coeff(static_cast<std::size_t>(ell), 0);
            for (int i = 0; i < ell; ++i) {
                for (int j = 0; j < ell; ++j) {
                    const long long v = ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)];
                    if (v != 0)
                        coeff[static_cast<std::size_t>(mod(static_cast<long long>(i) + j + nil->scalar.exponent, ell))]
                            += v * nil->scalar.sign;
                }
            }
            r.value.add(c, coeff);
        }
    }
    return r;
}

} // namespace nilcoh
