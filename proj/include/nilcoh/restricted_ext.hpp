#pragma once

#include "nilcoh/character.hpp"
#include "nilcoh/koszul.hpp"
#include "nilcoh/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace nilcoh {

/// Sparse vector over F_p keyed by basis index.
using SparseVector = std::map<std::uint64_t, std::int64_t>;
/// Compact PBW expansion: (monomial, coefficient in [1, p)).
using PbwTerms = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// The restricted enveloping algebra u(u_J) over F_p with PBW basis
/// x^a = prod x_gamma^{a_gamma}, 0 <= a_gamma < p, factors in gamma-order.
/// Weights are root-lattice coordinates of sum a_gamma gamma (nonnegative).
class RestrictedAlgebra {
public:
    static constexpr std::size_t default_budget = 15625; // 5^6

    static RestrictedAlgebra build(const RootSystem& rs, const std::vector<int>& J, long long p,
        std::size_t budget = default_budget);

    long long p() const { return field_.p; }
    const PrimeField& field() const { return field_; }
    const RootSystem& root_system() const { return rs_; }
    const std::vector<int>& J() const { return J_; }
    /// Gamma indices of the generators x_gamma.
    const std::vector<int>& roots() const { return roots_; }
    std::size_t dimension() const { return exponents_.size(); }

    const std::vector<int>& exponents(std::size_t m) const { return exponents_[m]; }
    const IntVector& weight(std::size_t m) const { return weights_[m]; }
    std::size_t unit() const { return 0; }
    std::optional<std::size_t> monomial_index(const std::vector<int>& exponents) const;
    /// Monomials of the given weight, or an empty list.
    const std::vector<std::size_t>& monomials_of_weight(const IntVector& weight) const;

    /// x^a x^b in the PBW basis. Memoized; not safe for concurrent use.
    const PbwTerms& product(std::size_t a, std::size_t b) const;
    /// x_gamma (local generator index) times x^b.
    const PbwTerms& left_generator(std::size_t generator, std::size_t b) const;

    /// (x y) z = x (y z) on `samples` random basis triples.
    bool check_associativity(int samples, unsigned seed) const;
    /// (ad x_gamma)^p = 0 on u_J for every generator.
    bool check_ad_nilpotent() const;

private:
    RootSystem rs_;
    std::vector<int> J_;
    PrimeField field_;
    ChevalleyBasis chevalley_;
    std::vector<int> roots_;
    std::vector<int> local_; ///< gamma index -> generator index or -1
    std::vector<std::size_t> radix_; ///< p^k
    std::vector<std::vector<int>> exponents_;
    std::vector<IntVector> weights_;
    std::map<IntVector, std::vector<std::size_t>, LexLess> by_weight_;
    mutable std::vector<std::optional<PbwTerms>> left_cache_;
    mutable std::unordered_map<std::uint64_t, PbwTerms> product_cache_;
};

/// Generator of a free module in a minimal resolution, with its image
/// under the differential (an element of the previous stage, keys
/// generator * dim(A) + monomial).
struct ResolutionGenerator {
    IntVector weight;
    SparseVector image;
};

/// Yoneda class: coefficients on the generators of stage `degree`
/// (the dual basis of Ext^degree).
struct ExtClass {
    int degree = 0;
    std::map<std::size_t, std::int64_t> coefficients;
    bool is_zero() const { return coefficients.empty(); }
};

/// Minimal weight-graded free resolution of the trivial module. Keeps a
/// pointer to the algebra, which must outlive it.
class MinimalResolution {
public:
    static MinimalResolution compute(const RestrictedAlgebra& algebra, int max_degree);

    const RestrictedAlgebra& algebra() const { return *algebra_; }
    int max_degree() const { return static_cast<int>(stages_.size()) - 1; }
    const std::vector<ResolutionGenerator>& stage(int n) const { return stages_.at(static_cast<std::size_t>(n)); }

    std::vector<long long> dims() const;
    /// Ext^n weights are minus the generator weights, in fundamental coordinates.
    GradedCharacter character() const;
    /// Generators of stage n with the given root-coordinate weight.
    std::vector<std::size_t> generators_of_weight(int n, const IntVector& weight) const;

    /// d(d(g)) = 0 and every differential coefficient lies in the augmentation ideal.
    bool check_complex() const;

    /// a . x for x in stage n's module (n >= 0).
    SparseVector act(std::size_t monomial, const SparseVector& x) const;
    /// Image under d_n of an element of P_n.
    SparseVector apply_differential(int n, const SparseVector& x) const;

private:
    const RestrictedAlgebra* algebra_ = nullptr;
    std::vector<std::vector<ResolutionGenerator>> stages_;
};

/// Yoneda product z1 . z2, computed by lifting z2 to a chain map and
/// composing with z1. Both classes must be weight-homogeneous and
/// d1 + d2 must not exceed the resolution's range.
ExtClass yoneda_product(const MinimalResolution& res, const ExtClass& z1, const ExtClass& z2);

} // namespace nilcoh
