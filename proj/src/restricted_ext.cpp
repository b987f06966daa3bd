#include "nilcoh/restricted_ext.hpp"

#include "nilcoh/weyl.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace nilcoh {

namespace {

struct HeightLess {
    bool operator()(const IntVector& a, const IntVector& b) const
    {
        const int ha = a.sum();
        const int hb = b.sum();
        if (ha != hb)
            return ha < hb;
        return LexLess{}(a, b);
    }
};

bool nonnegative(const IntVector& v)
{
    return (v.array() >= 0).all();
}

void accumulate(const PrimeField& F, SparseVector& out, std::uint64_t key, std::int64_t c)
{
    if (c == 0)
        return;
    auto [it, inserted] = out.emplace(key, c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (it->second == 0)
            out.erase(it);
    }
}

PbwTerms to_terms(const SparseVector& v)
{
    PbwTerms out;
    out.reserve(v.size());
    for (const auto& [k, c] : v)
        out.emplace_back(static_cast<std::uint32_t>(k), c);
    return out;
}

} // namespace

RestrictedAlgebra RestrictedAlgebra::build(const RootSystem& rs, const std::vector<int>& J, long long p,
    std::size_t budget)
{
    if (!is_prime(p))
        throw PreconditionError("p = " + std::to_string(p) + " is not prime");
    RestrictedAlgebra A;
    A.rs_ = rs;
    A.J_ = J;
    std::sort(A.J_.begin(), A.J_.end());
    A.field_ = PrimeField{p};
    A.chevalley_ = ChevalleyBasis::build(rs);
    A.roots_ = nilradical_roots(rs, A.J_);
    A.local_.assign(static_cast<std::size_t>(rs.num_positive()), -1);
    for (std::size_t k = 0; k < A.roots_.size(); ++k)
        A.local_[static_cast<std::size_t>(A.roots_[k])] = static_cast<int>(k);

    const std::size_t n = A.roots_.size();
    std::size_t dim = 1;
    A.radix_.clear();
    for (std::size_t k = 0; k < n; ++k) {
        A.radix_.push_back(dim);
        if (dim > budget / static_cast<std::size_t>(p))
            throw BudgetError("u(u_J) has dimension " + std::to_string(p) + "^" + std::to_string(n)
                + ", above the budget of " + std::to_string(budget));
        dim *= static_cast<std::size_t>(p);
    }
    A.exponents_.resize(dim);
    A.weights_.resize(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        std::vector<int> e(n);
        IntVector w = IntVector::Zero(rs.rank());
        std::size_t rest = m;
        for (std::size_t k = 0; k < n; ++k) {
            e[k] = static_cast<int>(rest % static_cast<std::size_t>(p));
            rest /= static_cast<std::size_t>(p);
            w += e[k] * rs.positive_root(A.roots_[k]).coords;
        }
        A.exponents_[m] = std::move(e);
        A.weights_[m] = w;
        A.by_weight_[w].push_back(m);
    }
    A.left_cache_.assign(n * dim, std::nullopt);
    if (!A.check_ad_nilpotent())
        throw PreconditionError("(ad x)^p is nonzero on u_J; p-th powers are not modeled");
    return A;
}

std::optional<std::size_t> RestrictedAlgebra::monomial_index(const std::vector<int>& exponents) const
{
    if (exponents.size() != roots_.size())
        return std::nullopt;
    std::size_t m = 0;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] < 0 || exponents[k] >= p())
            return std::nullopt;
        m += static_cast<std::size_t>(exponents[k]) * radix_[k];
    }
    return m;
}

const std::vector<std::size_t>& RestrictedAlgebra::monomials_of_weight(const IntVector& weight) const
{
    static const std::vector<std::size_t> none;
    auto it = by_weight_.find(weight);
    return it == by_weight_.end() ? none : it->second;
}

const PbwTerms& RestrictedAlgebra::left_generator(std::size_t g, std::size_t b) const
{
    auto& slot = left_cache_[g * dimension() + b];
    if (slot)
        return *slot;
    const auto& e = exponents_[b];
    std::size_t k = 0;
    while (k < e.size() && e[k] == 0)
        ++k;
    SparseVector out;
    if (k == e.size() || g < k) {
        out[b + radix_[g]] = 1;
    } else if (g == k) {
        if (e[k] + 1 < p())
            out[b + radix_[g]] = 1;
    } else {
        // x_g x_k m' = x_k (x_g m') + N(g, k) x_{g+k} m'
        const std::size_t rest = b - radix_[k];
        const PbwTerms inner = left_generator(g, rest);
        for (const auto& [m, c] : inner) {
            for (const auto& [m2, c2] : left_generator(k, m))
                accumulate(field_, out, m2, field_.mul(c, c2));
        }
        const int n = chevalley_.positive(roots_[g], roots_[k]);
        if (n != 0) {
            const IntVector sum = rs_.positive_root(roots_[g]).coords + rs_.positive_root(roots_[k]).coords;
            const int gk = local_[static_cast<std::size_t>(rs_.root_index(sum))];
            if (gk < 0)
                throw InternalError("u_J is not closed under brackets");
            const std::int64_t cn = field_.from_int(n);
            const PbwTerms bracket = left_generator(static_cast<std::size_t>(gk), rest);
            for (const auto& [m, c] : bracket)
                accumulate(field_, out, m, field_.mul(cn, c));
        }
    }
    slot = to_terms(out);
    return *slot;
}

const PbwTerms& RestrictedAlgebra::product(std::size_t a, std::size_t b) const
{
    const std::uint64_t key = static_cast<std::uint64_t>(a) * dimension() + b;
    if (auto it = product_cache_.find(key); it != product_cache_.end())
        return it->second;
    PbwTerms result;
    if (a == unit()) {
        result.emplace_back(static_cast<std::uint32_t>(b), 1);
    } else {
        const auto& e = exponents_[a];
        std::size_t k = 0;
        while (e[k] == 0)
            ++k;
        const PbwTerms inner = product(a - radix_[k], b);
        SparseVector out;
        for (const auto& [m, c] : inner) {
            for (const auto& [m2, c2] : left_generator(k, m))
                accumulate(field_, out, m2, field_.mul(c, c2));
        }
        result = to_terms(out);
    }
    return product_cache_.emplace(key, std::move(result)).first->second;
}

bool RestrictedAlgebra::check_associativity(int samples, unsigned seed) const
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, dimension() - 1);
    for (int s = 0; s < samples; ++s) {
        const std::size_t a = pick(rng);
        const std::size_t b = pick(rng);
        const std::size_t c = pick(rng);
        SparseVector lhs;
        SparseVector rhs;
        for (const auto& [m, x] : product(a, b)) {
            for (const auto& [m2, y] : product(m, c))
                accumulate(field_, lhs, m2, field_.mul(x, y));
        }
        for (const auto& [m, x] : product(b, c)) {
            for (const auto& [m2, y] : product(a, m))
                accumulate(field_, rhs, m2, field_.mul(x, y));
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

bool RestrictedAlgebra::check_ad_nilpotent() const
{
    const std::size_t n = roots_.size();
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            // Track c * x_r through p applications of ad x_g.
            std::int64_t c = 1;
            int r = roots_[h];
            for (long long step = 0; step < p() && c != 0; ++step) {
                const int nc = chevalley_.positive(roots_[g], r);
                if (nc == 0) {
                    c = 0;
                    break;
                }
                c = field_.mul(c, field_.from_int(nc));
                r = rs_.root_index(rs_.positive_root(roots_[g]).coords + rs_.positive_root(r).coords);
            }
            if (c != 0)
                return false;
        }
    }
    return true;
}

namespace {

// Basis of the weight-mu part of a free module on `gens`: keys g * dim + a.
std::vector<std::uint64_t> block_keys(const RestrictedAlgebra& A, const std::vector<ResolutionGenerator>& gens,
    const IntVector& mu)
{
    std::vector<std::uint64_t> keys;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const IntVector rest = mu - gens[g].weight;
        if (!nonnegative(rest))
            continue;
        for (std::size_t a : A.monomials_of_weight(rest))
            keys.push_back(static_cast<std::uint64_t>(g) * A.dimension() + a);
    }
    return keys;
}

Dense<std::int64_t> columns_of(const RestrictedAlgebra& A, const std::vector<std::uint64_t>& rows,
    const std::vector<SparseVector>& vectors)
{
    Dense<std::int64_t> m = zeros(A.field(), static_cast<Eigen::Index>(rows.size()),
        static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        for (const auto& [key, c] : vectors[j]) {
            auto it = std::lower_bound(rows.begin(), rows.end(), key);
            if (it == rows.end() || *it != key)
                throw InternalError("element leaves its weight block");
            m(it - rows.begin(), static_cast<Eigen::Index>(j)) = c;
        }
    }
    return m;
}

SparseVector column_vector(const std::vector<std::uint64_t>& keys, const Dense<std::int64_t>& m, Eigen::Index col)
{
    SparseVector v;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, col) != 0)
            v[keys[static_cast<std::size_t>(i)]] = m(i, col);
    }
    return v;
}

} // namespace

SparseVector MinimalResolution::act(std::size_t monomial, const SparseVector& x) const
{
    const RestrictedAlgebra& A = *algebra_;
    const std::uint64_t dim = A.dimension();
    SparseVector out;
    for (const auto& [key, c] : x) {
        const std::uint64_t g = key / dim;
        for (const auto& [m, c2] : A.product(monomial, key % dim))
            accumulate(A.field(), out, g * dim + m, A.field().mul(c, c2));
    }
    return out;
}

SparseVector MinimalResolution::apply_differential(int n, const SparseVector& x) const
{
    const RestrictedAlgebra& A = *algebra_;
    const std::uint64_t dim = A.dimension();
    const auto& gens = stage(n);
    SparseVector out;
    for (const auto& [key, c] : x) {
        if (n == 0) {
            if (key % dim == A.unit())
                accumulate(A.field(), out, 0, c);
            continue;
        }
        for (const auto& [k2, c2] : act(key % dim, gens[key / dim].image))
            accumulate(A.field(), out, k2, A.field().mul(c, c2));
    }
    return out;
}

MinimalResolution MinimalResolution::compute(const RestrictedAlgebra& A, int max_degree)
{
    if (max_degree < 0)
        throw PreconditionError("max degree must be nonnegative");
    const PrimeField& F = A.field();
    const int rank = A.root_system().rank();
    MinimalResolution res;
    res.algebra_ = &A;
    res.stages_.push_back({ResolutionGenerator{IntVector::Zero(rank), {}}});

    for (int n = 0; n < max_degree; ++n) {
        const auto& gens = res.stages_[static_cast<std::size_t>(n)];
        std::set<IntVector, HeightLess> weights;
        for (const auto& g : gens) {
            for (std::size_t m = 0; m < A.dimension(); ++m)
                weights.insert(g.weight + A.weight(m));
        }
        std::vector<ResolutionGenerator> next;
        for (const IntVector& mu : weights) {
            const auto cols = block_keys(A, gens, mu);
            if (cols.empty())
                continue;
            Dense<std::int64_t> K;
            if (n == 0) {
                // Kernel of the augmentation: everything but the unit.
                std::vector<SparseVector> basis;
                for (std::uint64_t key : cols) {
                    if (key % A.dimension() != A.unit())
                        basis.push_back({{key, 1}});
                }
                K = columns_of(A, cols, basis);
            } else {
                const auto rows = block_keys(A, res.stages_[static_cast<std::size_t>(n - 1)], mu);
                std::vector<SparseVector> images;
                images.reserve(cols.size());
                for (std::uint64_t key : cols)
                    images.push_back(res.apply_differential(n, {{key, 1}}));
                K = kernel(F, columns_of(A, rows, images));
            }
            if (K.cols() == 0)
                continue;
            // Part of the kernel already generated by lower-weight generators.
            std::vector<SparseVector> generated;
            for (const auto& h : next) {
                const IntVector rest = mu - h.weight;
                if (!nonnegative(rest) || rest.isZero())
                    continue;
                for (std::size_t a : A.monomials_of_weight(rest)) {
                    auto v = res.act(a, h.image);
                    if (!v.empty())
                        generated.push_back(std::move(v));
                }
            }
            const auto S = columns_of(A, cols, generated);
            for (Eigen::Index c : complement_columns(F, S, K))
                next.push_back(ResolutionGenerator{mu, column_vector(cols, K, c)});
        }
        res.stages_.push_back(std::move(next));
    }
    return res;
}

std::vector<long long> MinimalResolution::dims() const
{
    std::vector<long long> out;
    for (const auto& s : stages_)
        out.push_back(static_cast<long long>(s.size()));
    return out;
}

GradedCharacter MinimalResolution::character() const
{
    const RootSystem& rs = algebra_->root_system();
    GradedCharacter out(stages_.size());
    for (std::size_t n = 0; n < stages_.size(); ++n) {
        for (const auto& g : stages_[n])
            out[n].add(-rs.to_weight(g.weight), 1);
    }
    return out;
}

std::vector<std::size_t> MinimalResolution::generators_of_weight(int n, const IntVector& weight) const
{
    std::vector<std::size_t> out;
    const auto& gens = stage(n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].weight == weight)
            out.push_back(g);
    }
    return out;
}

bool MinimalResolution::check_complex() const
{
    const RestrictedAlgebra& A = *algebra_;
    for (int n = 1; n <= max_degree(); ++n) {
        for (const auto& g : stage(n)) {
            for (const auto& [key, c] : g.image) {
                if (key % A.dimension() == A.unit())
                    return false;
            }
            if (!apply_differential(n - 1, g.image).empty())
                return false;
        }
    }
    return true;
}

namespace {

class Lifter {
public:
    Lifter(const MinimalResolution& res, const ExtClass& z, const IntVector& weight)
        : res_(res)
        , z_(z)
        , weight_(weight)
    {
    }

    // f_i(g) in P_i for a generator g of stage z.degree + i.
    const SparseVector& lift(int i, std::size_t g)
    {
        const auto key = std::make_pair(i, g);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const RestrictedAlgebra& A = res_.algebra();
        const PrimeField& F = A.field();
        SparseVector value;
        if (i == 0) {
            if (auto it = z_.coefficients.find(g); it != z_.coefficients.end())
                value[A.unit()] = F.from_int(it->second);
        } else {
            const auto& gen = res_.stage(z_.degree + i)[g];
            SparseVector rhs;
            for (const auto& [k, c] : gen.image) {
                const SparseVector& prev = lift(i - 1, static_cast<std::size_t>(k / A.dimension()));
                for (const auto& [k2, c2] : res_.act(k % A.dimension(), prev))
                    accumulate(F, rhs, k2, F.mul(c, c2));
            }
            if (!rhs.empty()) {
                const IntVector mu = gen.weight - weight_;
                const auto cols = block_keys(A, res_.stage(i), mu);
                const auto rows = block_keys(A, res_.stage(i - 1), mu);
                std::vector<SparseVector> images;
                for (std::uint64_t k : cols)
                    images.push_back(res_.apply_differential(i, {{k, 1}}));
                const auto M = columns_of(A, rows, images);
                const auto b = columns_of(A, rows, {rhs});
                const auto x = solve(F, M, DenseVector<std::int64_t>(b.col(0)));
                if (!x)
                    throw InternalError("chain map does not lift; the resolution is not exact");
                for (Eigen::Index j = 0; j < x->size(); ++j) {
                    if ((*x)[j] != 0)
                        value[cols[static_cast<std::size_t>(j)]] = (*x)[j];
                }
            }
        }
        return memo_.emplace(key, std::move(value)).first->second;
    }

private:
    const MinimalResolution& res_;
    const ExtClass& z_;
    IntVector weight_;
    std::map<std::pair<int, std::size_t>, SparseVector> memo_;
};

IntVector class_weight(const MinimalResolution& res, const ExtClass& z)
{
    if (z.is_zero())
        throw PreconditionError("zero class has no weight");
    std::optional<IntVector> w;
    for (const auto& [g, c] : z.coefficients) {
        const IntVector& gw = res.stage(z.degree).at(g).weight;
        if (w && *w != gw)
            throw PreconditionError("Yoneda product needs weight-homogeneous classes");
        w = gw;
    }
    return *w;
}

} // namespace

ExtClass yoneda_product(const MinimalResolution& res, const ExtClass& z1, const ExtClass& z2)
{
    const int n = z1.degree + z2.degree;
    if (n > res.max_degree())
        throw PreconditionError("product degree " + std::to_string(n) + " exceeds the resolution range");
    ExtClass out;
    out.degree = n;
    if (z1.is_zero() || z2.is_zero())
        return out;
    const RestrictedAlgebra& A = res.algebra();
    const PrimeField& F = A.field();
    const IntVector w1 = class_weight(res, z1);
    const IntVector w2 = class_weight(res, z2);
    Lifter lifter(res, z2, w2);
    for (std::size_t g : res.generators_of_weight(n, w1 + w2)) {
        std::int64_t v = 0;
        for (const auto& [key, c] : lifter.lift(z1.degree, g)) {
            if (key % A.dimension() != A.unit())
                continue;
            auto it = z1.coefficients.find(static_cast<std::size_t>(key / A.dimension()));
            if (it != z1.coefficients.end())
                v = F.add(v, F.mul(c, F.from_int(it->second)));
        }
        if (v != 0)
            out.coefficients[g] = v;
    }
    return out;
}

} // namespace nilcoh
