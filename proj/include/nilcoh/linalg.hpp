#pragma once

#include "nilcoh/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilcoh {

template <class Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Z/p with p prime, elements kept in [0, p).
struct PrimeField {
    using Scalar = std::int64_t;
    std::int64_t p = 2;

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }
    Scalar from_int(long long v) const
    {
        const long long r = v % p;
        return r < 0 ? r + p : r;
    }
    Scalar add(Scalar a, Scalar b) const { return (a + b) % p; }
    Scalar sub(Scalar a, Scalar b) const { return (a - b + p) % p; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
    Scalar inv(Scalar a) const
    {
        // a^{p-2}
        Scalar result = 1;
        Scalar base = a % p;
        for (std::int64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
    bool is_zero(Scalar a) const { return a == 0; }
    /// Symmetric representative in (-p/2, p/2].
    long long to_signed(Scalar a) const { return a > p / 2 ? a - p : a; }
    std::string name() const { return "F_" + std::to_string(p); }
};

/// The rationals.
struct RationalField {
    using Scalar = BigRational;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long long v) const { return Scalar(v); }
    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar neg(const Scalar& a) const { return -a; }
    Scalar inv(const Scalar& a) const { return Scalar(1) / a; }
    bool is_zero(const Scalar& a) const { return a == 0; }
    std::string name() const { return "Q"; }
};

template <class Field>
Dense<typename Field::Scalar> zeros(const Field& F, Eigen::Index rows, Eigen::Index cols)
{
    Dense<typename Field::Scalar> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = F.zero();
    }
    return m;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class Field>
std::vector<Eigen::Index> rref(const Field& F, Dense<typename Field::Scalar>& m)
{
    using S = typename Field::Scalar;
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = row;
        while (piv < m.rows() && F.is_zero(m(piv, col)))
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            m.row(piv).swap(m.row(row));
        const S inv = F.inv(m(row, col));
        for (Eigen::Index j = col; j < m.cols(); ++j)
            m(row, j) = F.mul(m(row, j), inv);
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || F.is_zero(m(r, col)))
                continue;
            const S f = m(r, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) {
                if (!F.is_zero(m(row, j)))
                    m(r, j) = F.sub(m(r, j), F.mul(f, m(row, j)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Field>
std::size_t rank(const Field& F, Dense<typename Field::Scalar> m)
{
    return rref(F, m).size();
}

/// Columns spanning the right kernel of m.
template <class Field>
Dense<typename Field::Scalar> kernel(const Field& F, Dense<typename Field::Scalar> m)
{
    const auto pivots = rref(F, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;
    const Eigen::Index nfree = m.cols() - static_cast<Eigen::Index>(pivots.size());
    auto out = zeros(F, m.cols(), nfree);
    Eigen::Index k = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)])
            continue;
        out(c, k) = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            out(pivots[r], k) = F.neg(m(static_cast<Eigen::Index>(r), c));
        ++k;
    }
    return out;
}

/// Some x with A x = b, or nullopt.
template <class Field>
std::optional<DenseVector<typename Field::Scalar>> solve(const Field& F, const Dense<typename Field::Scalar>& A,
    const DenseVector<typename Field::Scalar>& b)
{
    Dense<typename Field::Scalar> aug(A.rows(), A.cols() + 1);
    aug.leftCols(A.cols()) = A;
    aug.col(A.cols()) = b;
    const auto pivots = rref(F, aug);
    DenseVector<typename Field::Scalar> x(A.cols());
    for (Eigen::Index i = 0; i < A.cols(); ++i)
        x[i] = F.zero();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == A.cols())
            return std::nullopt;
        x[pivots[r]] = aug(static_cast<Eigen::Index>(r), A.cols());
    }
    return x;
}

/// Indices of columns of `candidates` extending the column span of `base`
/// to the span of base + candidates, chosen greedily left to right.
template <class Field>
std::vector<Eigen::Index> complement_columns(const Field& F, const Dense<typename Field::Scalar>& base,
    const Dense<typename Field::Scalar>& candidates)
{
    Dense<typename Field::Scalar> joined(base.rows(), base.cols() + candidates.cols());
    joined.leftCols(base.cols()) = base;
    joined.rightCols(candidates.cols()) = candidates;
    const auto pivots = rref(F, joined);
    std::vector<Eigen::Index> out;
    for (auto c : pivots) {
        if (c >= base.cols())
            out.push_back(c - base.cols());
    }
    return out;
}

/// Fraction-free (Bareiss) rank of an integer matrix.
inline std::size_t bareiss_rank(Dense<BigInt> m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    BigInt prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = r;
        while (piv < rows && m(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            m.row(piv).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return static_cast<std::size_t>(r);
}

} // namespace nilcoh
