#pragma once

#include "nilcoh/root_system.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilcoh {

/// Weyl group element. `word` is reduced and multiplies left to right:
/// w = s_{word[0]} s_{word[1]} ... (0-based simple indices).
struct WeylElement {
    std::vector<int> word;
    IntMatrix action; ///< action on fundamental-weight coordinates

    int length() const { return static_cast<int>(word.size()); }
    IntVector apply(const IntVector& weight) const { return action * weight; }
    /// "e" or "s2s1" (1-based indices).
    std::string name() const;
};

struct EnumerateOptions {
    std::size_t max_order = 10'000'000;
    /// When set, enumerations are read from / written to this directory.
    std::optional<std::filesystem::path> cache_dir;
};

/// The full Weyl group, enumerated breadth-first along the orbit of rho so
/// that elements are grouped by length. Element identity is the image of rho.
class WeylGroup {
public:
    static WeylGroup enumerate(const RootSystem& rs, const EnumerateOptions& options = {});

    std::size_t size() const { return elements_.size(); }
    const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<WeylElement>& elements() const { return elements_; }

    std::size_t identity() const { return 0; }
    std::size_t longest() const { return elements_.size() - 1; }
    /// Index of the element with the given image of rho, if any.
    std::optional<std::size_t> find_by_rho_image(const IntVector& image) const;
    /// Index of the element given by an arbitrary (not necessarily reduced) word.
    std::size_t from_word(const std::vector<int>& word) const;
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;

    /// Coefficients of sum_w t^{l(w)}.
    std::vector<long long> length_polynomial() const;

    const RootSystem& root_system() const { return rs_; }
    bool loaded_from_cache() const { return from_cache_; }

private:
    RootSystem rs_;
    std::vector<WeylElement> elements_;
    std::map<IntVector, std::size_t, LexLess> by_image_;
    bool from_cache_ = false;

    void index();
};

/// w . lambda = w(lambda + rho) - rho.
IntVector dot(const WeylElement& w, const IntVector& lambda, const RootSystem& rs);

/// Phi(w) = w Phi^- cap Phi^+ as sorted gamma-order indices.
std::vector<int> inversion_set(const WeylElement& w, const RootSystem& rs);

/// Minimal length representatives ^J W = { w : w^{-1}(Phi_J^+) subset Phi^+ }.
struct CosetSystem {
    std::vector<int> J;             ///< 0-based simple indices
    std::vector<std::size_t> reps;  ///< indices into the WeylGroup, sorted by length
};

CosetSystem min_coset_reps(const WeylGroup& W, const std::vector<int>& J);

/// Indices of the parabolic subgroup W_J inside W.
std::vector<std::size_t> parabolic_subgroup(const WeylGroup& W, const std::vector<int>& J);

/// Longest element of W_J.
std::size_t parabolic_longest(const WeylGroup& W, const std::vector<int>& J);

/// Positive roots of the Levi subsystem Phi_J^+ as gamma-order indices.
std::vector<int> levi_positive_roots(const RootSystem& rs, const std::vector<int>& J);

/// Phi^+ \ Phi_J^+ (roots of u_J) as gamma-order indices.
std::vector<int> nilradical_roots(const RootSystem& rs, const std::vector<int>& J);

} // namespace nilcoh
