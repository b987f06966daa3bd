#pragma once

#include "nilcoh/character.hpp"
#include "nilcoh/linkage.hpp"

#include <string>
#include <vector>

namespace nilcoh {

/// Coefficient regime: characteristic zero, modular (prime p) or a
/// primitive l-th root of unity.
struct Mode {
    enum class Kind { classical, modular, quantum };
    Kind kind = Kind::classical;
    long long modulus = 0; ///< p or l; unused when classical

    static Mode classical() { return {Kind::classical, 0}; }
    static Mode modular(long long p) { return {Kind::modular, p}; }
    static Mode quantum(long long ell) { return {Kind::quantum, ell}; }

    std::string name() const;
    friend bool operator==(const Mode&, const Mode&) = default;
};

/// Parses "classical", "modular" or "quantum".
Mode::Kind parse_mode_kind(const std::string& name);

struct KostantEntry {
    std::size_t w = 0; ///< index into the WeylGroup, w in ^J W
    int degree = 0;    ///< l(w)
    IntVector highest_weight; ///< w . lambda
};

/// H^j(u_J, L(lambda)) = sum over w in ^J W with l(w) = j of L_J(w . lambda).
struct KostantDecomposition {
    Mode mode;
    std::vector<int> J;
    IntVector lambda;
    std::vector<KostantEntry> entries; ///< sorted by degree
    int top_degree = 0;                ///< |Phi^+ \ Phi_J^+|

    /// Levi character expansion, one entry per degree 0..top_degree.
    GradedCharacter character(const RootSystem& rs) const;
};

KostantDecomposition kostant_decomposition(const WeylGroup& W, const IntVector& lambda, const std::vector<int>& J,
    const Mode& mode);

/// S^i(u_J^*)^{(m)} tensor H^j(u_J, L(lambda)) with 2i + j = n.
struct Slab {
    int i = 0;
    int j = 0;
    FormalCharacter character;
};

struct BigradedCharacter {
    Mode mode;
    std::vector<int> J;
    IntVector lambda;
    std::vector<std::vector<Slab>> degrees; ///< degrees[n] holds the slabs with 2i + j = n, by increasing i

    GradedCharacter collapse() const;
};

/// H^*((U_J)_1, L(lambda)) for lambda in C_Z cap X^+ as a bigraded character,
/// through cohomological degree max_degree.
BigradedCharacter frobenius_kernel_character(const WeylGroup& W, const IntVector& lambda, const std::vector<int>& J,
    const Mode& mode, int max_degree);

/// H^*(u, L(lambda))^{T_1}: the weight w^{-1} sigma in degree l(w), or zero
/// when lambda is not weakly linked to 0. Degrees 0..N.
GradedCharacter t1_invariants(const WeylGroup& W, const IntVector& lambda, long long p);

/// H^*((P_J)_1, L(lambda)) through degree max_degree, untwisted.
GradedCharacter parabolic_character(const WeylGroup& W, const IntVector& lambda, const std::vector<int>& J,
    const Mode& mode, int max_degree);

} // namespace nilcoh
