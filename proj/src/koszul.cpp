#include "nilcoh/koszul.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace nilcoh {

namespace {

bool is_signed_root(const RootSystem& rs, const IntVector& v)
{
    return rs.is_root(v) || rs.is_root(-v);
}

bool is_positive(const IntVector& v)
{
    return (v.array() >= 0).all() && v.sum() > 0;
}

} // namespace

int ChevalleyBasis::constant(const IntVector& a, const IntVector& b) const
{
    const IntVector s = a + b;
    if (s.isZero() || !is_signed_root(rs_, s))
        return 0;
    const bool pa = is_positive(a);
    const bool pb = is_positive(b);
    if (pa && pb)
        return positive(rs_.root_index(a), rs_.root_index(b));
    if (!pa && !pb)
        return -positive(rs_.root_index(-a), rs_.root_index(-b));
    // a + b + c = 0 gives N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b); rotate
    // to the pair of equal signs.
    const IntVector c = -s;
    const bool pc = is_positive(c);
    long long num = 0;
    long long den = 0;
    if (pb == pc) {
        num = static_cast<long long>(rs_.root_inner(c, c)) * constant(b, c);
        den = rs_.root_inner(a, a);
    } else {
        num = static_cast<long long>(rs_.root_inner(c, c)) * constant(c, a);
        den = rs_.root_inner(b, b);
    }
    if (num % den != 0)
        throw InternalError("non-integral structure constant");
    return static_cast<int>(num / den);
}

ChevalleyBasis ChevalleyBasis::build(const RootSystem& rs)
{
    ChevalleyBasis cb;
    cb.rs_ = rs;
    const int n = rs.num_positive();
    cb.n_ = n;
    cb.table_.assign(static_cast<std::size_t>(n * n), 0);

    // Order: by height, then gamma index.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
        [&](int a, int b) { return rs.positive_root(a).height < rs.positive_root(b).height; });
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

    auto set = [&](int a, int b, int v) {
        cb.table_[static_cast<std::size_t>(a * n + b)] = v;
        cb.table_[static_cast<std::size_t>(b * n + a)] = -v;
    };

    for (int xi : order) {
        const Root& target = rs.positive_root(xi);
        // Special pairs (r, s) with r before s.
        std::vector<std::pair<int, int>> pairs;
        for (int r = 0; r < n; ++r) {
            const int s = rs.root_index(target.coords - rs.positive_root(r).coords);
            if (s >= 0 && position[static_cast<std::size_t>(r)] < position[static_cast<std::size_t>(s)])
                pairs.emplace_back(r, s);
        }
        if (pairs.empty())
            continue;
        std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
            return position[static_cast<std::size_t>(x.first)] < position[static_cast<std::size_t>(y.first)];
        });
        const auto [r0, s0] = pairs.front();
        const IntVector& R = rs.positive_root(r0).coords;
        const IntVector& S = rs.positive_root(s0).coords;
        int q = 0;
        while (is_signed_root(rs, S - (q + 1) * R))
            ++q;
        set(r0, s0, q + 1);

        const long long xi_norm = target.norm;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto [r1, s1] = pairs[k];
            const IntVector& R1 = rs.positive_root(r1).coords;
            const IntVector& S1 = rs.positive_root(s1).coords;
            Rational sum(0);
            const IntVector d1 = S1 - R;
            if (is_signed_root(rs, d1))
                sum += Rational(static_cast<long long>(cb.constant(S1, -R)) * cb.constant(R1, -S),
                    rs.root_inner(d1, d1));
            const IntVector d2 = R1 - R;
            if (is_signed_root(rs, d2))
                sum += Rational(static_cast<long long>(cb.constant(-R, R1)) * cb.constant(S1, -S),
                    rs.root_inner(d2, d2));
            const Rational value = Rational(xi_norm) / Rational(q + 1) * sum;
            if (value.denominator() != 1)
                throw InternalError("non-integral structure constant for " + format_vector(target.coords));
            set(r1, s1, static_cast<int>(value.numerator()));
        }
    }

    // Jacobi identity and the root-string rule on positive roots.
    for (int a = 0; a < n; ++a) {
        const IntVector& A = rs.positive_root(a).coords;
        for (int b = 0; b < n; ++b) {
            const IntVector& B = rs.positive_root(b).coords;
            const int v = cb.positive(a, b);
            if (rs.root_index(A + B) >= 0) {
                int q = 0;
                while (is_signed_root(rs, B - (q + 1) * A))
                    ++q;
                if (std::abs(v) != q + 1)
                    throw InternalError("structure constant violates the root-string rule");
            } else if (v != 0) {
                throw InternalError("structure constant set for a non-root sum");
            }
            for (int c = 0; c < n; ++c) {
                const IntVector& C = rs.positive_root(c).coords;
                if (rs.root_index(A + B + C) < 0)
                    continue;
                const long long jac = static_cast<long long>(cb.constant(B, C)) * cb.constant(A, B + C)
                    + static_cast<long long>(cb.constant(C, A)) * cb.constant(B, C + A)
                    + static_cast<long long>(cb.constant(A, B)) * cb.constant(C, A + B);
                if (jac != 0)
                    throw InternalError("Jacobi identity fails for structure constants");
            }
        }
    }
    return cb;
}

std::optional<Wedge> wedge(std::uint32_t a, std::uint32_t b)
{
    if (a & b)
        return std::nullopt;
    // Each factor of b passes every larger factor of a.
    int swaps = 0;
    for (std::uint32_t rest = b; rest; rest &= rest - 1) {
        const int y = std::countr_zero(rest);
        const std::uint32_t above = y >= 31 ? 0u : (a & ~((2u << y) - 1u));
        swaps += std::popcount(above);
    }
    return Wedge{swaps % 2 ? -1 : 1, a | b};
}

CEComplex CEComplex::build(const RootSystem& rs, const std::vector<int>& J, std::size_t max_roots)
{
    CEComplex cx;
    cx.rs_ = rs;
    cx.chevalley_ = ChevalleyBasis::build(rs);
    cx.J_ = J;
    std::sort(cx.J_.begin(), cx.J_.end());
    cx.roots_ = nilradical_roots(rs, cx.J_);
    if (cx.roots_.size() > max_roots || cx.roots_.size() > 30)
        throw BudgetError("Koszul complex of dimension 2^" + std::to_string(cx.roots_.size())
                          + " exceeds the budget of 2^" + std::to_string(std::min<std::size_t>(max_roots, 30)));
    const int N = static_cast<int>(cx.roots_.size());
    cx.local_.assign(static_cast<std::size_t>(rs.num_positive()), -1);
    for (int k = 0; k < N; ++k)
        cx.local_[static_cast<std::size_t>(cx.roots_[static_cast<std::size_t>(k)])] = k;

    cx.df_.resize(static_cast<std::size_t>(N));
    for (int g = 0; g < N; ++g) {
        const IntVector& G = rs.positive_root(cx.roots_[static_cast<std::size_t>(g)]).coords;
        for (int b = 0; b < N; ++b) {
            for (int d = b + 1; d < N; ++d) {
                const int rb = cx.roots_[static_cast<std::size_t>(b)];
                const int rd = cx.roots_[static_cast<std::size_t>(d)];
                if (rs.positive_root(rb).coords + rs.positive_root(rd).coords != G)
                    continue;
                cx.df_[static_cast<std::size_t>(g)].emplace_back((1u << b) | (1u << d),
                    -cx.chevalley_.positive(rb, rd));
            }
        }
    }

    std::map<std::pair<int, IntVector>, std::vector<std::uint32_t>, BlockKeyLess> grouped;
    const std::uint32_t limit = N == 0 ? 1u : (1u << N);
    for (std::uint32_t mask = 0; mask < limit; ++mask)
        grouped[{std::popcount(mask), cx.weight_of(mask)}].push_back(mask);
    for (auto& [key, basis] : grouped) {
        cx.index_.emplace(key, cx.blocks_.size());
        cx.blocks_.push_back(Block{key.first, key.second, std::move(basis)});
    }
    return cx;
}

const CEComplex::Block* CEComplex::find_block(int degree, const IntVector& weight) const
{
    auto it = index_.find({degree, weight});
    return it == index_.end() ? nullptr : &blocks_[it->second];
}

IntVector CEComplex::weight_of(std::uint32_t mask) const
{
    IntVector w = IntVector::Zero(rs_.rank());
    for (std::uint32_t rest = mask; rest; rest &= rest - 1)
        w -= rs_.positive_root(roots_[static_cast<std::size_t>(std::countr_zero(rest))]).coords;
    return w;
}

std::uint32_t CEComplex::mask_of(const std::vector<int>& gamma_indices) const
{
    std::uint32_t mask = 0;
    for (int g : gamma_indices) {
        const int bit = local_.at(static_cast<std::size_t>(g));
        if (bit < 0)
            throw PreconditionError("root outside u_J in a cochain");
        mask |= 1u << bit;
    }
    return mask;
}

std::map<std::uint32_t, long long> CEComplex::differential(std::uint32_t mask) const
{
    std::map<std::uint32_t, long long> out;
    int position = 0;
    std::uint32_t prefix = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++position) {
        const int bit = std::countr_zero(rest);
        const std::uint32_t suffix = mask & ~((2u << bit) - 1u);
        for (const auto& [pair, coeff] : df_[static_cast<std::size_t>(bit)]) {
            const auto left = wedge(prefix, pair);
            if (!left)
                continue;
            const auto full = wedge(left->mask, suffix);
            if (!full)
                continue;
            const long long sign = (position % 2 ? -1 : 1) * left->sign * full->sign;
            auto& slot = out[full->mask];
            slot += sign * coeff;
            if (slot == 0)
                out.erase(full->mask);
        }
        prefix |= 1u << bit;
    }
    return out;
}

Dense<long long> CEComplex::block_matrix(const Block& from) const
{
    const Block* to = find_block(from.degree + 1, from.weight);
    const Eigen::Index rows = to ? static_cast<Eigen::Index>(to->basis.size()) : 0;
    Dense<long long> m = Dense<long long>::Zero(rows, static_cast<Eigen::Index>(from.basis.size()));
    if (!to)
        return m;
    for (std::size_t c = 0; c < from.basis.size(); ++c) {
        for (const auto& [target, coeff] : differential(from.basis[c])) {
            auto it = std::lower_bound(to->basis.begin(), to->basis.end(), target);
            if (it == to->basis.end() || *it != target)
                throw InternalError("differential leaves its weight block");
            m(it - to->basis.begin(), static_cast<Eigen::Index>(c)) = coeff;
        }
    }
    return m;
}

void check_d_squared(const CEComplex& complex)
{
    for (const auto& block : complex.blocks()) {
        const auto* mid = complex.find_block(block.degree + 1, block.weight);
        if (!mid)
            continue;
        const Dense<long long> d1 = complex.block_matrix(block);
        const Dense<long long> d2 = complex.block_matrix(*mid);
        if (d2.rows() == 0)
            continue;
        if (!(d2 * d1).isZero())
            throw InternalError("d^2 != 0 in the Chevalley-Eilenberg complex at degree "
                                + std::to_string(block.degree) + ", weight " + format_vector(block.weight));
    }
}

namespace {

template <class Field>
Dense<typename Field::Scalar> to_field(const Field& F, const Dense<long long>& m)
{
    Dense<typename Field::Scalar> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = F.from_int(m(i, j));
    }
    return out;
}

std::size_t block_rank(const Dense<long long>& m, const FieldSpec& field)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    if (field.rational()) {
        Dense<BigInt> big(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                big(i, j) = m(i, j);
        }
        return bareiss_rank(std::move(big));
    }
    const PrimeField F{field.p};
    return rank(F, to_field(F, m));
}

template <class Field>
CupResult cup_in_field(const Field& F, const CEComplex& cx, const WeylGroup& W, const std::vector<std::size_t>& reps,
    std::size_t w1, std::size_t w2)
{
    const RootSystem& rs = cx.root_system();
    const std::uint32_t m1 = cx.mask_of(inversion_set(W[w1], rs));
    const std::uint32_t m2 = cx.mask_of(inversion_set(W[w2], rs));
    if (!cx.differential(m1).empty() || !cx.differential(m2).empty())
        throw InternalError("inversion-set representative is not a cocycle");

    const auto product = wedge(m1, m2);
    if (!product)
        return {};
    const int n = std::popcount(product->mask);
    const IntVector mu = cx.weight_of(product->mask);
    const CEComplex::Block* block = cx.find_block(n, mu);
    const auto& basis = block->basis;
    const auto dim = static_cast<Eigen::Index>(basis.size());
    auto locate = [&](std::uint32_t mask) {
        return static_cast<Eigen::Index>(std::lower_bound(basis.begin(), basis.end(), mask) - basis.begin());
    };

    // Coboundaries landing in this block.
    Dense<typename Field::Scalar> boundaries = zeros(F, dim, 0);
    if (const auto* lower = cx.find_block(n - 1, mu))
        boundaries = to_field(F, cx.block_matrix(*lower));
    const Dense<typename Field::Scalar> cycles = kernel(F, to_field(F, cx.block_matrix(*block)));

    // Harvested classes first, then arbitrary cocycles to complete a basis.
    std::vector<std::size_t> harvested;
    for (std::size_t r : reps) {
        if (W[r].length() != n)
            continue;
        const std::uint32_t m = cx.mask_of(inversion_set(W[r], rs));
        if (cx.weight_of(m) == mu)
            harvested.push_back(r);
    }
    const auto nh = static_cast<Eigen::Index>(harvested.size());
    Dense<typename Field::Scalar> candidates = zeros(F, dim, nh + cycles.cols());
    for (Eigen::Index k = 0; k < nh; ++k)
        candidates(locate(cx.mask_of(inversion_set(W[harvested[static_cast<std::size_t>(k)]], rs))), k) = F.one();
    candidates.rightCols(cycles.cols()) = cycles;
    const auto chosen = complement_columns(F, boundaries, candidates);
    for (Eigen::Index k = 0; k < nh; ++k) {
        if (std::find(chosen.begin(), chosen.end(), k) == chosen.end())
            throw InternalError("harvested class [f_Phi(w)] is not independent in cohomology");
    }

    Dense<typename Field::Scalar> system(dim, boundaries.cols() + static_cast<Eigen::Index>(chosen.size()));
    system.leftCols(boundaries.cols()) = boundaries;
    for (std::size_t k = 0; k < chosen.size(); ++k)
        system.col(boundaries.cols() + static_cast<Eigen::Index>(k)) = candidates.col(chosen[k]);
    DenseVector<typename Field::Scalar> v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        v[i] = F.zero();
    v[locate(product->mask)] = F.from_int(product->sign);
    const auto x = solve(F, system, v);
    if (!x)
        throw InternalError("wedge of cocycles is not a cocycle");

    CupResult result;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        const auto& c = (*x)[boundaries.cols() + static_cast<Eigen::Index>(k)];
        if (F.is_zero(c))
            continue;
        if (chosen[k] >= nh || result.target)
            throw InternalError("cup product is not a multiple of a single basis class");
        result.target = harvested[static_cast<std::size_t>(chosen[k])];
        if (c == F.one())
            result.coefficient = 1;
        else if (c == F.neg(F.one()))
            result.coefficient = -1;
        else
            throw InternalError("cup product coefficient is not a sign");
    }
    return result;
}

} // namespace

GradedCharacter cohomology(const CEComplex& complex, const FieldSpec& field)
{
    if (!field.rational() && !is_prime(field.p))
        throw PreconditionError("the oracle field needs a prime characteristic, got " + std::to_string(field.p));
    const RootSystem& rs = complex.root_system();
    std::vector<std::size_t> out_rank(complex.blocks().size());
    for (std::size_t k = 0; k < complex.blocks().size(); ++k)
        out_rank[k] = block_rank(complex.block_matrix(complex.blocks()[k]), field);

    GradedCharacter h(static_cast<std::size_t>(complex.top_degree()) + 1);
    for (std::size_t k = 0; k < complex.blocks().size(); ++k) {
        const auto& block = complex.blocks()[k];
        std::size_t in_rank = 0;
        if (const auto* lower = complex.find_block(block.degree - 1, block.weight))
            in_rank = out_rank[static_cast<std::size_t>(lower - complex.blocks().data())];
        const long long dim = static_cast<long long>(block.basis.size() - out_rank[k] - in_rank);
        h[static_cast<std::size_t>(block.degree)].add(rs.to_weight(block.weight), dim);
    }
    return h;
}

GradedCharacter cohomology(const RootSystem& rs, const std::vector<int>& J, const FieldSpec& field,
    std::size_t max_roots)
{
    const CEComplex complex = CEComplex::build(rs, J, max_roots);
    check_d_squared(complex);
    return cohomology(complex, field);
}

CupResult cochain_cup(const CEComplex& complex, const WeylGroup& W, std::size_t w1, std::size_t w2,
    const FieldSpec& field)
{
    std::vector<int> J;
    const RootSystem& rs = complex.root_system();
    for (int i = 0; i < rs.rank(); ++i) {
        IntVector e = IntVector::Zero(rs.rank());
        e[i] = 1;
        if (std::find(complex.roots().begin(), complex.roots().end(), rs.root_index(e)) == complex.roots().end())
            J.push_back(i);
    }
    const auto reps = min_coset_reps(W, J).reps;
    for (std::size_t w : {w1, w2}) {
        if (std::find(reps.begin(), reps.end(), w) == reps.end())
            throw PreconditionError("cochain_cup needs elements of ^J W");
    }
    if (field.rational())
        return cup_in_field(RationalField{}, complex, W, reps, w1, w2);
    if (!is_prime(field.p))
        throw PreconditionError("the oracle field needs a prime characteristic");
    return cup_in_field(PrimeField{field.p}, complex, W, reps, w1, w2);
}

} // namespace nilcoh
