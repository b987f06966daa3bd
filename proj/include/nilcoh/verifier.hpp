#pragma once

#include "nilcoh/kostant.hpp"

#include <string>
#include <vector>

namespace nilcoh {

/// A witness of mu1 + mu2 = mu3 + m sigma (or w1 . lambda = w2 . lambda + m sigma).
/// Weights and sigma are in fundamental coordinates.
struct Violation {
    std::vector<std::size_t> elements; ///< Weyl group indices of the witnesses
    std::vector<IntVector> weights;    ///< the weights entering the equation
    IntVector sigma;
    long long modulus = 0;

    friend bool operator==(const Violation& a, const Violation& b)
    {
        return a.elements == b.elements && a.weights == b.weights && a.sigma == b.sigma && a.modulus == b.modulus;
    }
};

enum class SigmaDomain { root_lattice, weight_lattice };
std::string to_string(SigmaDomain d);
SigmaDomain parse_sigma_domain(const std::string& name);

struct SearchOptions {
    unsigned threads = 0;                   ///< 0: hardware concurrency
    unsigned long long budget = 1000000000; ///< maximal number of tuples scanned
};

/// All (w1, w2, w3) with w1.0 + w2.0 = w3.0 + p sigma, sigma in ZPhi \ {0}.
std::vector<Violation> search_sum_dot(const WeylGroup& W, long long p, const SearchOptions& options = {});

/// All mu1 + mu2 = mu3 + p sigma, sigma in ZPhi \ {0}, with mu_i a weight of
/// L_J(w_i . 0) and w_i in ^J W.
std::vector<Violation> search_levi_weights(const WeylGroup& W, const std::vector<int>& J, long long p,
    const SearchOptions& options = {});

/// All w1 != w2 with w1 . lambda = w2 . lambda + m sigma and sigma in the chosen
/// lattice. Quantum mode first applies the weight-separation gate.
std::vector<Violation> search_dot_collisions(const WeylGroup& W, const IntVector& lambda, const Mode& mode,
    SigmaDomain domain, const SearchOptions& options = {});

/// Re-checks the defining equation of a sum-type violation (three weights) or
/// a collision (two weights) by direct arithmetic.
bool revalidate(const RootSystem& rs, const Violation& v, SigmaDomain domain);

struct CheckResult {
    enum class Status { pass, fail, skipped };
    std::string name;
    Status status = Status::pass;
    std::string detail;
};
std::string to_string(CheckResult::Status s);

struct SuiteReport {
    std::string type;
    long long modulus = 0;
    std::vector<CheckResult> checks;
    /// Degree-4 squares of degree-2 Ext classes that the formal model predicts
    /// to vanish but that are nonzero (weights in fundamental coordinates).
    std::vector<IntVector> square_anomalies;
    bool pass() const;
};

/// Cross-module harness: Kostant vs the Koszul oracle, nil_product signs vs
/// the cochain cup, restricted Ext vs the bigraded character, and (above
/// the bound) the ring identity on one-dimensional weight spaces.
SuiteReport consistency_suite(const WeylGroup& W, long long p, int max_degree = 4);

} // namespace nilcoh
