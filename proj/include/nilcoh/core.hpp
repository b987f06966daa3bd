#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcoh {

inline constexpr const char* kVersion = "0.1.0";

/// Integer vector: a weight in fundamental-weight coordinates or a root in
/// simple-root coordinates, depending on context.
using IntVector = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;

/// Total order on integer vectors (length first, then lexicographic), used as
/// the key order of every weight-indexed container.
struct LexLess {
    bool operator()(const IntVector& a, const IntVector& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a[i] != b[i])
                return a[i] < b[i];
        }
        return false;
    }
};

struct IntVectorHash {
    std::size_t operator()(const IntVector& v) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v[i]));
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct IntVectorEqual {
    bool operator()(const IntVector& a, const IntVector& b) const
    {
        return a.size() == b.size() && a == b;
    }
};

inline IntVector make_vector(std::initializer_list<int> xs)
{
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (int x : xs)
        v[i++] = x;
    return v;
}

inline std::vector<int> to_std(const IntVector& v)
{
    return std::vector<int>(v.data(), v.data() + v.size());
}

inline IntVector from_std(const std::vector<int>& v)
{
    IntVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        out[static_cast<Eigen::Index>(i)] = v[i];
    return out;
}

/// "a,b,c" rendering used in text output and error messages.
std::string format_vector(const IntVector& v);

/// A mathematical precondition or admissibility gate failed. The message
/// names the violated condition. The CLI maps this to exit status 2.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource budget would be exceeded.
class BudgetError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An internal consistency check failed (d^2 != 0, non-cocycle, lifting
/// failure, ...). Signals a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

std::uint64_t fnv1a(const std::string& bytes);

bool is_prime(long long n);

} // namespace nilcoh
