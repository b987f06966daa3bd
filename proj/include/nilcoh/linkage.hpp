#pragma once

#include "nilcoh/weyl.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilcoh {

/// 0 < (lambda + rho, beta^vee) < p for all positive beta (<= p when closed).
bool in_alcove(const RootSystem& rs, const IntVector& lambda, long long p, bool closed);

/// mu in X_J^+ and (mu, alpha^vee) < p for every alpha in J.
bool j_restricted(const RootSystem& rs, const IntVector& mu, const std::vector<int>& J, long long p);

/// (mu, beta^vee) >= 0 for every beta in Phi_J^+.
bool j_dominant(const RootSystem& rs, const IntVector& mu, const std::vector<int>& J);

/// lambda = w . 0 + modulus * sigma.
struct LinkageDatum {
    std::size_t w = 0; ///< index into the WeylGroup
    IntVector sigma;
    long long modulus = 0;
};

/// The unique (w, sigma) with lambda = w.0 + modulus * sigma, sigma in X.
/// Requires lambda in X^+ cap closed C_Z and modulus > h. Every w in W is
/// tried, so a second solution is reported as an internal error.
std::optional<LinkageDatum> weak_linkage(const WeylGroup& W, const IntVector& lambda, long long modulus);

enum class GateContext { base, weight_separation, kostant, ring };

GateContext parse_gate_context(std::string_view name);
std::string to_string(GateContext context);

struct AdmissibilityProfile {
    long long modulus = 1;
    bool odd = false;
    bool gt_h = false;
    bool ge_hminus1 = false;
    bool gt_2hminus2 = false;
    /// coprime to 3 for G2
    bool coprime_base = false;
    /// coprime to n+1 for A_n, to 3 for E6 and G2
    bool coprime_connection = false;
};

struct GateResult {
    AdmissibilityProfile profile;
    GateContext context = GateContext::base;
    bool pass = false;
    std::vector<std::string> failed; ///< names of the violated flags
};

AdmissibilityProfile admissibility_profile(const RootSystem& rs, long long ell);
GateResult admissibility(const RootSystem& rs, long long ell, GateContext context);
/// Throws PreconditionError naming every failed flag.
void require_admissible(const RootSystem& rs, long long ell, GateContext context);

} // namespace nilcoh
