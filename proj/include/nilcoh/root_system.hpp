#pragma once

#include "nilcoh/core.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilcoh {

using Rational = boost::rational<long long>;

enum class CartanFamily { A, B, C, D, E, F, G };

struct CartanType {
    CartanFamily family = CartanFamily::A;
    int rank = 1;

    std::string label() const;
    /// Parses labels such as "A2", "b2", "E6".
    static CartanType parse(std::string_view label);

    friend bool operator==(const CartanType&, const CartanType&) = default;
};

struct Root {
    IntVector coords; ///< simple-root coordinates
    IntVector weight; ///< fundamental-weight coordinates
    int norm = 2;     ///< (beta, beta); short roots have norm 2
    int height = 1;
    bool is_long = false;
};

/// Finite crystallographic root system with exact integral data.
///
/// Conventions: `cartan()(i, j) = <alpha_i^vee, alpha_j>` so that the
/// fundamental-weight coordinates of a root with simple-root coordinates c
/// are `cartan() * c`. The inner product is normalised so short roots have
/// squared length 2. Positive roots are stored in the canonical convex order
/// gamma_1 < ... < gamma_N induced by `longest_word()`, the lexicographically
/// smallest reduced expression of w0.
class RootSystem {
public:
    static RootSystem build(CartanType type);
    static RootSystem build(std::string_view label) { return build(CartanType::parse(label)); }

    const CartanType& type() const { return type_; }
    std::string label() const { return type_.label(); }
    int rank() const { return type_.rank; }

    const IntMatrix& cartan() const { return cartan_; }
    /// d_i = (alpha_i, alpha_i) / 2.
    const IntVector& symmetrizers() const { return symmetrizers_; }
    /// (alpha_i, alpha_j).
    const IntMatrix& gram() const { return gram_; }

    int num_positive() const { return static_cast<int>(positive_.size()); }
    std::span<const Root> positive_roots() const { return positive_; }
    const Root& positive_root(int k) const { return positive_.at(static_cast<std::size_t>(k)); }
    /// Index of a positive root (simple-root coordinates) in gamma-order, or -1.
    int root_index(const IntVector& coords) const;
    bool is_root(const IntVector& coords) const;

    /// Simple-root coordinates -> fundamental-weight coordinates.
    IntVector to_weight(const IntVector& coords) const { return cartan_ * coords; }
    /// Fundamental-weight coordinates -> simple-root coordinates; nullopt when
    /// the weight is not in the root lattice.
    std::optional<IntVector> to_root_coords(const IntVector& weight) const;
    std::vector<Rational> root_coords_rational(const IntVector& weight) const;
    bool in_root_lattice(const IntVector& weight) const { return to_root_coords(weight).has_value(); }

    /// (mu, beta^vee) for a weight mu and a root beta.
    int pairing(const IntVector& weight, const Root& beta) const;
    int pairing(const IntVector& weight, const IntVector& root_coords) const;
    /// Exact (mu, nu) for weights in fundamental coordinates.
    Rational inner(const IntVector& mu, const IntVector& nu) const;
    /// det(C) * (mu, nu), always an integer.
    long long inner_scaled(const IntVector& mu, const IntVector& nu) const;
    /// (beta, gamma) for roots in simple-root coordinates.
    int root_inner(const IntVector& a, const IntVector& b) const;

    /// Reflection s_i on fundamental-weight coordinates.
    IntVector reflect_weight(int i, const IntVector& weight) const;
    /// Reflection s_i on simple-root coordinates.
    IntVector reflect_root(int i, const IntVector& coords) const;

    IntVector rho() const { return IntVector::Ones(rank()); }
    bool is_dominant(const IntVector& weight) const { return (weight.array() >= 0).all(); }
    const Root& highest_short_root() const { return positive_.at(static_cast<std::size_t>(highest_short_)); }
    const Root& highest_root() const { return positive_.at(static_cast<std::size_t>(highest_)); }
    int coxeter_number() const;
    /// |X / Z Phi| = det(C).
    long long connection_index() const { return det_; }
    std::vector<IntVector> minuscule_weights() const;
    /// Reduced word of w0 (0-based simple indices) fixing the gamma-order.
    const std::vector<int>& longest_word() const { return longest_word_; }

    /// Stable hash of the Cartan data and gamma-order, for certificates.
    std::string fingerprint() const;

private:
    CartanType type_;
    IntMatrix cartan_;
    IntVector symmetrizers_;
    IntMatrix gram_;
    IntMatrix adjugate_; ///< det(C) * C^{-1}
    long long det_ = 1;
    std::vector<Root> positive_;
    std::vector<int> longest_word_;
    int highest_short_ = 0;
    int highest_ = 0;
};

/// Fundamental-weight coordinates of omega_i (0-based).
IntVector fundamental_weight(const RootSystem& rs, int i);

} // namespace nilcoh
