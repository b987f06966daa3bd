#pragma once

#include "nilcoh/character.hpp"
#include "nilcoh/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilcoh {

/// Structure constants [x_a, x_b] = N(a, b) x_{a+b} of a Chevalley basis,
/// pinned by N = +(q+1) on extraspecial pairs (q the largest integer with
/// b - q a a root), using the order by height then gamma-index.
class ChevalleyBasis {
public:
    static ChevalleyBasis build(const RootSystem& rs);

    /// N(a, b) for positive roots given as gamma indices; 0 when a+b is no root.
    int positive(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
    /// N(a, b) for arbitrary nonzero roots in simple-root coordinates.
    int constant(const IntVector& a, const IntVector& b) const;

    int num_positive() const { return n_; }

private:
    RootSystem rs_;
    int n_ = 0;
    std::vector<int> table_;
};

/// Field choice for the oracle.
struct FieldSpec {
    long long p = 0; ///< 0 selects the rationals
    bool rational() const { return p == 0; }
    std::string name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }
};

/// Sign and support of a wedge of basis covectors, or nullopt if two
/// factors coincide. Bits index the roots of u_J in gamma-order.
struct Wedge {
    int sign = 1;
    std::uint32_t mask = 0;
};
std::optional<Wedge> wedge(std::uint32_t a, std::uint32_t b);

struct BlockKeyLess {
    bool operator()(const std::pair<int, IntVector>& a, const std::pair<int, IntVector>& b) const
    {
        if (a.first != b.first)
            return a.first < b.first;
        return LexLess{}(a.second, b.second);
    }
};

/// Chevalley-Eilenberg cochain complex of u_J with trivial coefficients,
/// split by degree and T-weight. The differential has integer entries.
class CEComplex {
public:
    static CEComplex build(const RootSystem& rs, const std::vector<int>& J, std::size_t max_roots = 14);

    /// Gamma indices of the roots of u_J; bit k of a cochain mask refers to roots()[k].
    const std::vector<int>& roots() const { return roots_; }
    int top_degree() const { return static_cast<int>(roots_.size()); }

    struct Block {
        int degree = 0;
        IntVector weight;                 ///< simple-root coordinates
        std::vector<std::uint32_t> basis; ///< sorted masks
    };
    /// All blocks, ordered by (degree, weight).
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block* find_block(int degree, const IntVector& weight) const;

    /// d f_S as a sparse integer combination of masks.
    std::map<std::uint32_t, long long> differential(std::uint32_t mask) const;
    /// Integer matrix of d from block (degree, weight) into (degree+1, weight).
    Dense<long long> block_matrix(const Block& from) const;

    /// Simple-root coordinates of the weight of f_S, i.e. minus the root sum.
    IntVector weight_of(std::uint32_t mask) const;
    std::uint32_t mask_of(const std::vector<int>& gamma_indices) const;

    const RootSystem& root_system() const { return rs_; }
    const ChevalleyBasis& chevalley() const { return chevalley_; }

private:
    RootSystem rs_;
    ChevalleyBasis chevalley_;
    std::vector<int> J_;
    std::vector<int> roots_;
    std::vector<int> local_; ///< gamma index -> bit, or -1
    std::vector<std::vector<std::pair<std::uint32_t, int>>> df_; ///< d f_gamma per bit: (pair mask, coefficient)
    std::vector<Block> blocks_;
    std::map<std::pair<int, IntVector>, std::size_t, BlockKeyLess> index_;
};

/// Verifies d o d = 0 on every block; throws InternalError otherwise.
void check_d_squared(const CEComplex& complex);

/// Per-degree T-characters of H^*(u_J, k) over the chosen field, weights in
/// fundamental coordinates.
GradedCharacter cohomology(const CEComplex& complex, const FieldSpec& field);

/// Convenience: builds the complex (budget on |Phi^+ \ Phi_J^+|) and computes its cohomology.
GradedCharacter cohomology(const RootSystem& rs, const std::vector<int>& J, const FieldSpec& field,
    std::size_t max_roots = 14);

/// [f_{Phi(w)}] cup [f_{Phi(w')}] = coefficient * [f_{Phi(w'')}].
struct CupResult {
    int coefficient = 0;              ///< -1, 0 or +1
    std::optional<std::size_t> target; ///< w'' when the product is nonzero
};

/// Wedges the cocycle representatives and expresses the product class in the
/// basis of H^n harvested from {[f_{Phi(w)}]} and completed by other cocycles.
CupResult cochain_cup(const CEComplex& complex, const WeylGroup& W, std::size_t w1, std::size_t w2,
    const FieldSpec& field);

} // namespace nilcoh
