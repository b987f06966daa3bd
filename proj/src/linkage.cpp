#include "nilcoh/linkage.hpp"

#include <numeric>

namespace nilcoh {

bool in_alcove(const RootSystem& rs, const IntVector& lambda, long long p, bool closed)
{
    const IntVector shifted = lambda + rs.rho();
    for (const Root& beta : rs.positive_roots()) {
        const long long v = rs.pairing(shifted, beta);
        if (v <= 0)
            return false;
        if (closed ? v > p : v >= p)
            return false;
    }
    return true;
}

bool j_dominant(const RootSystem& rs, const IntVector& mu, const std::vector<int>& J)
{
    for (int k : levi_positive_roots(rs, J)) {
        if (rs.pairing(mu, rs.positive_root(k)) < 0)
            return false;
    }
    return true;
}

bool j_restricted(const RootSystem& rs, const IntVector& mu, const std::vector<int>& J, long long p)
{
    if (!j_dominant(rs, mu, J))
        return false;
    for (int j : J) {
        if (mu[j] >= p)
            return false;
    }
    return true;
}

std::optional<LinkageDatum> weak_linkage(const WeylGroup& W, const IntVector& lambda, long long modulus)
{
    const RootSystem& rs = W.root_system();
    if (modulus <= rs.coxeter_number())
        throw PreconditionError("weak linkage requires modulus > h = " + std::to_string(rs.coxeter_number()));
    if (!rs.is_dominant(lambda) || !in_alcove(rs, lambda, modulus, true))
        throw PreconditionError("weak linkage requires lambda in X^+ cap closed C_Z");

    std::optional<LinkageDatum> found;
    const IntVector zero = IntVector::Zero(rs.rank());
    for (std::size_t k = 0; k < W.size(); ++k) {
        const IntVector diff = lambda - dot(W[k], zero, rs);
        bool divisible = true;
        for (Eigen::Index i = 0; i < diff.size(); ++i) {
            if (diff[i] % modulus != 0)
                divisible = false;
        }
        if (!divisible)
            continue;
        if (found)
            throw InternalError("weak linkage of " + format_vector(lambda) + " is not unique");
        found = LinkageDatum{k, diff / static_cast<int>(modulus), modulus};
    }
    return found;
}

GateContext parse_gate_context(std::string_view name)
{
    if (name == "base")
        return GateContext::base;
    if (name == "weight-separation")
        return GateContext::weight_separation;
    if (name == "kostant")
        return GateContext::kostant;
    if (name == "ring")
        return GateContext::ring;
    throw PreconditionError("unknown admissibility context: " + std::string(name));
}

std::string to_string(GateContext context)
{
    switch (context) {
    case GateContext::base: return "base";
    case GateContext::weight_separation: return "weight-separation";
    case GateContext::kostant: return "kostant";
    case GateContext::ring: return "ring";
    }
    return "?";
}

AdmissibilityProfile admissibility_profile(const RootSystem& rs, long long ell)
{
    if (ell < 1)
        throw PreconditionError("modulus must be positive");
    const long long h = rs.coxeter_number();
    AdmissibilityProfile a;
    a.modulus = ell;
    a.odd = ell % 2 == 1;
    a.gt_h = ell > h;
    a.ge_hminus1 = ell >= h - 1;
    a.gt_2hminus2 = ell > 2 * (h - 1);
    const CartanType& t = rs.type();
    const bool g2 = t.family == CartanFamily::G;
    a.coprime_base = !g2 || std::gcd(ell, 3LL) == 1;
    if (t.family == CartanFamily::A)
        a.coprime_connection = std::gcd(ell, static_cast<long long>(t.rank + 1)) == 1;
    else if (g2 || (t.family == CartanFamily::E && t.rank == 6))
        a.coprime_connection = std::gcd(ell, 3LL) == 1;
    else
        a.coprime_connection = true;
    return a;
}

GateResult admissibility(const RootSystem& rs, long long ell, GateContext context)
{
    GateResult r;
    r.profile = admissibility_profile(rs, ell);
    r.context = context;
    const AdmissibilityProfile& a = r.profile;
    auto need = [&](bool flag, const char* name) {
        if (!flag)
            r.failed.emplace_back(name);
    };
    need(a.odd, "odd");
    need(a.coprime_base, "coprime_base");
    switch (context) {
    case GateContext::base:
        break;
    case GateContext::weight_separation:
        need(a.coprime_connection, "coprime_connection");
        break;
    case GateContext::kostant:
        need(a.ge_hminus1, "ge_hminus1");
        break;
    case GateContext::ring:
        need(a.coprime_connection, "coprime_connection");
        need(a.gt_2hminus2, "gt_2hminus2");
        break;
    }
    r.pass = r.failed.empty();
    return r;
}

void require_admissible(const RootSystem& rs, long long ell, GateContext context)
{
    const GateResult r = admissibility(rs, ell, context);
    if (r.pass)
        return;
    std::string names;
    for (const auto& f : r.failed)
        names += (names.empty() ? "" : ", ") + f;
    throw PreconditionError("admissibility gate '" + to_string(context) + "' failed for " + rs.label()
                            + " at modulus " + std::to_string(ell) + ": " + names);
}

} // namespace nilcoh
