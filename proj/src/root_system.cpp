#include "nilcoh/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace nilcoh {

namespace {

struct Diagram {
    std::vector<int> half_norms;
    std::vector<std::pair<int, int>> edges;
};

Diagram dynkin_diagram(const CartanType& t)
{
    const int n = t.rank;
    Diagram d;
    d.half_norms.assign(static_cast<std::size_t>(n), 1);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i)
            d.edges.emplace_back(i, i + 1);
    };
    switch (t.family) {
    case CartanFamily::A:
        chain(n);
        break;
    case CartanFamily::B:
        chain(n);
        for (int i = 0; i + 1 < n; ++i)
            d.half_norms[static_cast<std::size_t>(i)] = 2;
        break;
    case CartanFamily::C:
        chain(n);
        d.half_norms[static_cast<std::size_t>(n - 1)] = 2;
        break;
    case CartanFamily::D:
        chain(n - 1);
        d.edges.emplace_back(n - 3, n - 1);
        break;
    case CartanFamily::E:
        // Bourbaki numbering: 1-3-4-5-6(-7-8) with 2 attached to 4.
        d.edges = {{0, 2}, {1, 3}, {2, 3}};
        for (int i = 3; i + 1 < n; ++i)
            d.edges.emplace_back(i, i + 1);
        break;
    case CartanFamily::F:
        chain(4);
        d.half_norms = {2, 2, 1, 1};
        break;
    case CartanFamily::G:
        chain(2);
        d.half_norms = {1, 3};
        break;
    }
    return d;
}

void validate(const CartanType& t)
{
    const int n = t.rank;
    bool ok = false;
    switch (t.family) {
    case CartanFamily::A: ok = n >= 1 && n <= 8; break;
    case CartanFamily::B: ok = n >= 2 && n <= 8; break;
    case CartanFamily::C: ok = n >= 2 && n <= 8; break;
    case CartanFamily::D: ok = n >= 4 && n <= 8; break;
    case CartanFamily::E: ok = n >= 6 && n <= 8; break;
    case CartanFamily::F: ok = n == 4; break;
    case CartanFamily::G: ok = n == 2; break;
    }
    if (!ok)
        throw PreconditionError("unsupported Cartan type/rank: " + t.label());
}

long long bareiss_determinant(const IntMatrix& m)
{
    const Eigen::Index n = m.rows();
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> a = m.cast<long long>();
    long long sign = 1;
    long long prev = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// det(m) * m^{-1} via exact rational Gauss-Jordan.
IntMatrix adjugate(const IntMatrix& m, long long det)
{
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (a[piv][col].numerator() == 0)
            ++piv;
        std::swap(a[piv], a[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (auto& x : a[col])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].numerator() == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational v = a[i][n + j] * det;
            if (v.denominator() != 1)
                throw InternalError("adjugate of Cartan matrix is not integral");
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<int>(v.numerator());
        }
    }
    return out;
}

} // namespace

std::string CartanType::label() const
{
    static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

CartanType CartanType::parse(std::string_view label)
{
    if (label.size() < 2)
        throw PreconditionError("malformed Cartan type label: '" + std::string(label) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    if (f < 'A' || f > 'G')
        throw PreconditionError("unknown Cartan family in '" + std::string(label) + "'");
    int rank = 0;
    for (char c : label.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw PreconditionError("malformed Cartan type label: '" + std::string(label) + "'");
        rank = rank * 10 + (c - '0');
    }
    CartanType t{static_cast<CartanFamily>(f - 'A'), rank};
    validate(t);
    return t;
}

RootSystem RootSystem::build(CartanType type)
{
    validate(type);
    const int n = type.rank;
    const Diagram diagram = dynkin_diagram(type);

    RootSystem rs;
    rs.type_ = type;
    rs.symmetrizers_ = from_std(diagram.half_norms);
    rs.gram_ = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        rs.gram_(i, i) = 2 * rs.symmetrizers_[i];
    for (auto [i, j] : diagram.edges) {
        const int v = -std::max(rs.symmetrizers_[i], rs.symmetrizers_[j]);
        rs.gram_(i, j) = v;
        rs.gram_(j, i) = v;
    }
    rs.cartan_ = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            rs.cartan_(i, j) = 2 * rs.gram_(i, j) / rs.gram_(i, i);
    }
    rs.det_ = bareiss_determinant(rs.cartan_);
    rs.adjugate_ = adjugate(rs.cartan_, rs.det_);

    // Closure from the simple roots, processed in order of height.
    std::vector<IntVector> found;
    std::set<IntVector, LexLess> known;
    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e[i] = 1;
        found.push_back(e);
        known.insert(e);
    }
    for (std::size_t idx = 0; idx < found.size(); ++idx) {
        const IntVector beta = found[idx];
        const IntVector pair = rs.cartan_ * beta;
        for (int i = 0; i < n; ++i) {
            IntVector down = beta;
            int q = 0;
            for (;;) {
                down[i] -= 1;
                if (!known.contains(down))
                    break;
                ++q;
            }
            const int p = q - pair[i];
            if (p > 0) {
                IntVector up = beta;
                up[i] += 1;
                if (known.insert(up).second)
                    found.push_back(up);
            }
        }
    }

    // Lexicographically smallest reduced word of w0: repeatedly strip the
    // smallest left descent, tracked through the image of rho.
    IntVector image = -rs.rho();
    while (image != rs.rho()) {
        int i = 0;
        while (image[i] >= 0)
            ++i;
        rs.longest_word_.push_back(i);
        image = rs.reflect_weight(i, image);
    }
    if (rs.longest_word_.size() != found.size())
        throw InternalError("reduced word of w0 has wrong length");

    for (std::size_t k = 0; k < rs.longest_word_.size(); ++k) {
        IntVector c = IntVector::Zero(n);
        c[rs.longest_word_[k]] = 1;
        for (std::size_t t = k; t-- > 0;)
            c = rs.reflect_root(rs.longest_word_[t], c);
        Root r;
        r.coords = c;
        r.weight = rs.to_weight(c);
        r.norm = rs.root_inner(c, c);
        r.height = c.sum();
        r.is_long = r.norm > 2;
        if ((c.array() < 0).any() || !known.contains(c))
            throw InternalError("convex order produced a non-positive root");
        rs.positive_.push_back(std::move(r));
    }

    int best_short = -1;
    int best = -1;
    for (int k = 0; k < rs.num_positive(); ++k) {
        const Root& r = rs.positive_[static_cast<std::size_t>(k)];
        if (r.norm == 2 && (best_short < 0 || r.height > rs.positive_[static_cast<std::size_t>(best_short)].height))
            best_short = k;
        if (best < 0 || r.height > rs.positive_[static_cast<std::size_t>(best)].height)
            best = k;
    }
    rs.highest_short_ = best_short;
    rs.highest_ = best;
    return rs;
}

int RootSystem::root_index(const IntVector& coords) const
{
    for (int k = 0; k < num_positive(); ++k) {
        if (positive_[static_cast<std::size_t>(k)].coords == coords)
            return k;
    }
    return -1;
}

bool RootSystem::is_root(const IntVector& coords) const
{
    if (coords.size() != rank())
        return false;
    return root_index(coords) >= 0 || root_index(-coords) >= 0;
}

std::optional<IntVector> RootSystem::to_root_coords(const IntVector& weight) const
{
    IntVector scaled = adjugate_ * weight;
    for (Eigen::Index i = 0; i < scaled.size(); ++i) {
        if (scaled[i] % det_ != 0)
            return std::nullopt;
        scaled[i] = static_cast<int>(scaled[i] / det_);
    }
    return scaled;
}

std::vector<Rational> RootSystem::root_coords_rational(const IntVector& weight) const
{
    const IntVector scaled = adjugate_ * weight;
    std::vector<Rational> out;
    for (Eigen::Index i = 0; i < scaled.size(); ++i)
        out.emplace_back(scaled[i], det_);
    return out;
}

int RootSystem::pairing(const IntVector& weight, const IntVector& root_coords) const
{
    long long num = 0;
    for (int j = 0; j < rank(); ++j)
        num += static_cast<long long>(root_coords[j]) * symmetrizers_[j] * weight[j];
    const int norm = root_inner(root_coords, root_coords);
    if ((2 * num) % norm != 0)
        throw InternalError("non-integral coroot pairing");
    return static_cast<int>(2 * num / norm);
}

int RootSystem::pairing(const IntVector& weight, const Root& beta) const
{
    long long num = 0;
    for (int j = 0; j < rank(); ++j)
        num += static_cast<long long>(beta.coords[j]) * symmetrizers_[j] * weight[j];
    return static_cast<int>(2 * num / beta.norm);
}

long long RootSystem::inner_scaled(const IntVector& mu, const IntVector& nu) const
{
    const IntVector adj_nu = adjugate_ * nu;
    long long s = 0;
    for (int i = 0; i < rank(); ++i)
        s += static_cast<long long>(mu[i]) * symmetrizers_[i] * adj_nu[i];
    return s;
}

Rational RootSystem::inner(const IntVector& mu, const IntVector& nu) const
{
    return Rational(inner_scaled(mu, nu), det_);
}

int RootSystem::root_inner(const IntVector& a, const IntVector& b) const
{
    return a.dot(gram_ * b);
}

IntVector RootSystem::reflect_weight(int i, const IntVector& weight) const
{
    return weight - weight[i] * cartan_.col(i);
}

IntVector RootSystem::reflect_root(int i, const IntVector& coords) const
{
    IntVector out = coords;
    out[i] -= cartan_.row(i).dot(coords);
    return out;
}

int RootSystem::coxeter_number() const
{
    return pairing(rho(), highest_short_root()) + 1;
}

std::vector<IntVector> RootSystem::minuscule_weights() const
{
    std::vector<IntVector> out;
    const int n = rank();
    for (int mask = 1; mask < (1 << n); ++mask) {
        IntVector mu(n);
        for (int i = 0; i < n; ++i)
            mu[i] = (mask >> i) & 1;
        const bool minuscule = std::all_of(positive_.begin(), positive_.end(),
            [&](const Root& beta) { return pairing(mu, beta) <= 1; });
        if (minuscule)
            out.push_back(mu);
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::string RootSystem::fingerprint() const
{
    std::ostringstream os;
    os << label() << ';';
    for (Eigen::Index i = 0; i < cartan_.rows(); ++i)
        os << format_vector(cartan_.row(i).transpose()) << ';';
    for (const Root& r : positive_)
        os << format_vector(r.coords) << '|';
    std::ostringstream hex;
    hex << std::hex << fnv1a(os.str());
    return hex.str();
}

IntVector fundamental_weight(const RootSystem& rs, int i)
{
    IntVector w = IntVector::Zero(rs.rank());
    w[i] = 1;
    return w;
}

} // namespace nilcoh
