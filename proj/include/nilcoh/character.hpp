#pragma once

#include "nilcoh/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilcoh {

/// Finitely supported integer-valued function on X (fundamental coordinates).
/// Zero multiplicities are never stored.
class FormalCharacter {
public:
    using Map = std::map<IntVector, long long, LexLess>;

    FormalCharacter() = default;
    static FormalCharacter point(const IntVector& weight, long long mult = 1);
    /// {0 -> 1} in rank n.
    static FormalCharacter trivial(int rank);

    void add(const IntVector& weight, long long mult);
    long long multiplicity(const IntVector& weight) const;
    long long dimension() const;
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    Map::const_iterator begin() const { return terms_.begin(); }
    Map::const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    FormalCharacter& operator+=(const FormalCharacter& other);
    FormalCharacter& operator-=(const FormalCharacter& other);
    friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
    friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
    /// Convolution (character of the tensor product).
    friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b);
    friend FormalCharacter operator*(long long c, const FormalCharacter& a);
    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) { return a.terms_ == b.terms_; }

    /// Weights rendered as "[1,0]:2 [0,-1]:1".
    std::string to_string() const;

private:
    Map terms_;
};

/// One FormalCharacter per cohomological degree, starting at 0.
using GradedCharacter = std::vector<FormalCharacter>;

std::vector<long long> poincare(const GradedCharacter& g);
/// "1 + 2t + 2t^2 + t^3"; zero coefficients are skipped, "0" when all vanish.
std::string format_poincare(const std::vector<long long>& coeffs);

/// Weyl dimension formula for the Levi L_J at a J-dominant weight.
long long levi_weyl_dimension(const RootSystem& rs, const IntVector& mu, const std::vector<int>& J);

/// Characteristic-zero character of the simple L_J-module of highest weight
/// mu (Freudenthal recursion over the weights of the Levi). The modular and
/// quantum simple characters are taken equal to these in the lowest-alcove
/// regime this library works in.
FormalCharacter levi_simple_character(const RootSystem& rs, const IntVector& mu, const std::vector<int>& J);

/// sum_mu chi(mu) * chi_J(mu), where chi_J is the Weyl-Euler character of
/// the Levi: 0 on dot-singular weights, otherwise (-1)^{l(u)} times the
/// simple character of the J-dominant u . mu.
FormalCharacter euler_induction(const RootSystem& rs, const FormalCharacter& chi, const std::vector<int>& J);

/// Scales every weight by m.
FormalCharacter frobenius_twist(const FormalCharacter& chi, int m);

/// Character of S^i of the dual of span{x_gamma : gamma in roots}, i.e.
/// degree-i multisets of the negatives of the given roots (gamma indices).
FormalCharacter symmetric_character(const RootSystem& rs, const std::vector<int>& roots, int degree);

/// Characters of S^0 .. S^max_degree in one pass.
std::vector<FormalCharacter> symmetric_characters(const RootSystem& rs, const std::vector<int>& roots, int max_degree);

/// Applies a Weyl element to every weight.
FormalCharacter apply_weyl(const WeylElement& w, const FormalCharacter& chi);

} // namespace nilcoh
