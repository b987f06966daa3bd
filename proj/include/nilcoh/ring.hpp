#pragma once

#include "nilcoh/kostant.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilcoh {

/// +-zeta^k with zeta a formal primitive l-th root of unity; l = 1 gives
/// plain signs. sign 0 is the zero scalar.
struct CycScalar {
    int sign = 1;
    int exponent = 0;
    int ell = 1;

    static CycScalar zero(int ell) { return {0, 0, ell}; }
    static CycScalar one(int ell) { return {1, 0, ell}; }
    bool is_zero() const { return sign == 0; }
    CycScalar operator*(const CycScalar& o) const;
    /// "1", "-1", "z^3", "-z^2"
    std::string to_string() const;
    friend bool operator==(const CycScalar& a, const CycScalar& b)
    {
        return a.sign == b.sign && (a.sign == 0 || a.exponent == b.exponent) && a.ell == b.ell;
    }
};

/// Result of straightening a monomial of the quantum exterior algebra.
struct Straightened {
    CycScalar scalar;
    std::vector<int> monomial; ///< strictly increasing gamma indices
};

/// Sorts x_{m1} x_{m2} ... into gamma-order using x_a x_b = -zeta^{(gamma_a, gamma_b)} x_b x_a
/// for a > b, and x_a^2 = 0. Adjacent transpositions are applied by bubble
/// sort unless `swap_order` supplies another choice of adjacent positions
/// (used to check confluence); nullopt means the monomial vanishes.
std::optional<Straightened> quantum_exterior_straighten(const RootSystem& rs, const std::vector<int>& monomial,
    int ell);
std::optional<Straightened> quantum_exterior_straighten(const RootSystem& rs, const std::vector<int>& monomial,
    int ell, const std::vector<std::size_t>& swap_order);

/// Product of basis classes f_{Phi(w)} of H^*(u_J, k) (or its quantum analog).
struct NilProduct {
    CycScalar scalar;
    std::size_t w = 0;
};

/// The nil-cohomology ring with basis {[f_{Phi(w)}] : w in ^J W}.
class NilRing {
public:
    NilRing(const WeylGroup& W, std::vector<int> J);

    const WeylGroup& weyl() const { return *W_; }
    const RootSystem& root_system() const { return W_->root_system(); }
    const std::vector<int>& J() const { return J_; }
    const std::vector<std::size_t>& reps() const { return reps_; }
    const std::vector<int>& inversions(std::size_t w) const;
    /// Roots of u_J (gamma indices), the polynomial generators of the full ring.
    const std::vector<int>& nilradical() const { return nilradical_; }

    /// Classical cup product: zero when Phi(w), Phi(w') meet or their union is
    /// no inversion set; otherwise the sign of the merge permutation.
    std::optional<NilProduct> nil_product(std::size_t w1, std::size_t w2) const;

    /// Quantum cup product through straightening in the quantum exterior
    /// algebra. Requires the ring admissibility gate unless `unsafe`.
    std::optional<NilProduct> quantum_nil_product(std::size_t w1, std::size_t w2, int ell, bool unsafe = false) const;

private:
    const WeylGroup* W_;
    std::vector<int> J_;
    std::vector<std::size_t> reps_;
    std::vector<int> nilradical_;
    std::map<std::size_t, std::vector<int>> inversions_;
    std::map<std::vector<int>, std::size_t> by_inversions_;

    std::optional<std::size_t> element_with(const std::vector<int>& inversion_set) const;
};

/// s-part (exponents over nilradical()) and w-part of a basis class of
/// S^*(u_J^*)^{(m)} tensor H^*(u_J, k).
struct BasisClass {
    std::vector<int> s;
    std::size_t w = 0;

    friend bool operator<(const BasisClass& a, const BasisClass& b)
    {
        return a.s != b.s ? a.s < b.s : a.w < b.w;
    }
    friend bool operator==(const BasisClass& a, const BasisClass& b) = default;
};

int degree(const NilRing& ring, const BasisClass& c);
/// Weight in fundamental coordinates: -m * sum s_gamma gamma + w . 0.
IntVector weight(const NilRing& ring, const BasisClass& c, int modulus);

/// Element of Z[Z/l]: coefficients of 1, zeta, ..., zeta^{l-1}.
using GroupRingCoeff = std::vector<long long>;

/// Linear combination of basis classes with Z[Z/l] coefficients (l = 1 for the modular ring).
struct RingElement {
    int ell = 1;
    std::map<BasisClass, GroupRingCoeff> terms;

    static RingElement basis(const BasisClass& c, int ell = 1);
    static RingElement unit(const NilRing& ring, int ell = 1);
    void add(const BasisClass& c, const CycScalar& s);
    void add(const BasisClass& c, const GroupRingCoeff& coeff);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const RingElement& a, const RingElement& b) { return a.ell == b.ell && a.terms == b.terms; }
};

struct ProductOptions {
    Mode mode = Mode::modular(0);
    /// Compute below the bound anyway; the result is labelled a formal model.
    bool unsafe_below_bound = false;
};

struct ProductResult {
    RingElement value;
    bool formal_model = false;
    std::string label; ///< "H^*((U_J)_1,k)" or "formal model, not H^*(U_1,k)"
};

/// Bound for the full ring: modular p > 2(h-1) when J is empty and
/// p > 3(h-1) otherwise; quantum: the ring admissibility gate. Returns the
/// violated condition, or an empty string.
std::string full_ring_bound_violation(const NilRing& ring, const Mode& mode);

ProductResult full_product(const NilRing& ring, const RingElement& x, const RingElement& y,
    const ProductOptions& options);

} // namespace nilcoh
