#pragma once

#include "nilcoh/kostant.hpp"
#include "nilcoh/restricted_ext.hpp"
#include "nilcoh/ring.hpp"
#include "nilcoh/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nilcoh {

using Json = nlohmann::ordered_json;

Json to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

/// [[weight, multiplicity], ...] in weight order.
Json to_json(const FormalCharacter& chi);
FormalCharacter character_from_json(const Json& j);

/// [{degree, dimension, character}, ...]
Json to_json(const GradedCharacter& g);
GradedCharacter graded_from_json(const Json& j);

/// Cartan matrix, roots in both coordinate systems, gamma-order and fingerprint.
Json to_json(const RootSystem& rs);

Json to_json(const KostantDecomposition& k, const WeylGroup& W);
Json to_json(const BigradedCharacter& b);

Json to_json(const Violation& v, const WeylGroup& W);
Violation violation_from_json(const Json& j);

/// Search certificate with version, Cartan fingerprint and gamma-order.
Json certificate(const std::string& lemma, const RootSystem& rs, long long modulus, SigmaDomain domain,
    const std::vector<Violation>& violations, const WeylGroup& W, double elapsed_ms);

Json to_json(const SuiteReport& r);

/// Multiplication table row: w1 * w2 = sign zeta^exponent w (or zero).
struct RingTableRow {
    std::size_t w1 = 0;
    std::size_t w2 = 0;
    std::optional<std::size_t> w;
    int sign = 0;
    int zeta_exponent = 0;
};

/// Classical table for ell = 1, quantum table otherwise.
std::vector<RingTableRow> ring_table(const NilRing& ring, int ell, bool unsafe);

Json to_json(const std::vector<RingTableRow>& rows, const NilRing& ring);
/// Header lines start with '#': w0 reduced word and gamma-order.
std::string ring_table_csv(const std::vector<RingTableRow>& rows, const NilRing& ring);
std::string ring_table_tex(const std::vector<RingTableRow>& rows, const NilRing& ring);

/// degree,weight,multiplicity rows (weights as "a;b").
std::string graded_csv(const GradedCharacter& g);
/// Tabular body: degree & weight & multiplicity.
std::string graded_tex(const GradedCharacter& g);

/// Sparse triples "row col value" of an integer matrix.
std::string sparse_triples(const Dense<long long>& m);

/// Certificate for a minimal resolution: dims, weights and optionally the square of z.
struct ExampleProduct {
    int degree = 0;
    IntVector weight;
    bool nonzero = false;
};
Json ext_certificate(const MinimalResolution& res, const std::optional<ExampleProduct>& example);

} // namespace nilcoh
