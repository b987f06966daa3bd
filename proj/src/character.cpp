#include "nilcoh/character.hpp"

#include "nilcoh/linkage.hpp"

#include <set>
#include <sstream>

namespace nilcoh {

FormalCharacter FormalCharacter::point(const IntVector& weight, long long mult)
{
    FormalCharacter c;
    c.add(weight, mult);
    return c;
}

FormalCharacter FormalCharacter::trivial(int rank)
{
    return point(IntVector::Zero(rank));
}

void FormalCharacter::add(const IntVector& weight, long long mult)
{
    if (mult == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(weight, mult);
    if (inserted)
        return;
    it->second += mult;
    if (it->second == 0)
        terms_.erase(it);
}

long long FormalCharacter::multiplicity(const IntVector& weight) const
{
    auto it = terms_.find(weight);
    return it == terms_.end() ? 0 : it->second;
}

long long FormalCharacter::dimension() const
{
    long long d = 0;
    for (const auto& [w, m] : terms_)
        d += m;
    return d;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& other)
{
    for (const auto& [w, m] : other.terms_)
        add(w, m);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& other)
{
    for (const auto& [w, m] : other.terms_)
        add(w, -m);
    return *this;
}

FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b)
{
    FormalCharacter out;
    for (const auto& [wa, ma] : a.terms_) {
        for (const auto& [wb, mb] : b.terms_)
            out.add(wa + wb, ma * mb);
    }
    return out;
}

FormalCharacter operator*(long long c, const FormalCharacter& a)
{
    FormalCharacter out;
    for (const auto& [w, m] : a.terms_)
        out.add(w, c * m);
    return out;
}

std::string FormalCharacter::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, m] : terms_) {
        if (!first)
            os << ' ';
        first = false;
        os << '[' << format_vector(w) << "]:" << m;
    }
    return os.str();
}

std::vector<long long> poincare(const GradedCharacter& g)
{
    std::vector<long long> out;
    out.reserve(g.size());
    for (const FormalCharacter& c : g)
        out.push_back(c.dimension());
    return out;
}

std::string format_poincare(const std::vector<long long>& coeffs)
{
    std::string s;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        long long c = coeffs[n];
        if (c == 0)
            continue;
        if (!s.empty()) {
            s += c < 0 ? " - " : " + ";
            c = c < 0 ? -c : c;
        } else if (c < 0) {
            s += "-";
            c = -c;
        }
        if (n == 0)
            s += std::to_string(c);
        else {
            if (c != 1)
                s += std::to_string(c);
            s += "t";
            if (n > 1)
                s += "^" + std::to_string(n);
        }
    }
    return s.empty() ? "0" : s;
}

long long levi_weyl_dimension(const RootSystem& rs, const IntVector& mu, const std::vector<int>& J)
{
    // For beta in Phi_J, (rho - rho_J, beta^vee) = 0, so rho can stand in for rho_J.
    Rational d(1);
    const IntVector shifted = mu + rs.rho();
    for (int k : levi_positive_roots(rs, J)) {
        const Root& beta = rs.positive_root(k);
        d *= Rational(rs.pairing(shifted, beta), rs.pairing(rs.rho(), beta));
    }
    if (d.denominator() != 1)
        throw InternalError("Weyl dimension formula produced a non-integer");
    return d.numerator();
}

FormalCharacter levi_simple_character(const RootSystem& rs, const IntVector& mu, const std::vector<int>& J)
{
    if (!j_dominant(rs, mu, J))
        throw PreconditionError("levi_simple_character requires a J-dominant weight, got " + format_vector(mu));

    const auto levi = levi_positive_roots(rs, J);
    const IntVector rho = rs.rho();
    const long long top = rs.inner_scaled(mu + rho, mu + rho);

    // The weights form a saturated set, so a level-by-level sweep downward
    // along the simple roots of J reaches all of them.
    FormalCharacter out = FormalCharacter::point(mu);
    std::vector<IntVector> level{mu};
    while (!level.empty()) {
        std::set<IntVector, LexLess> candidates;
        for (const IntVector& nu : level) {
            for (int j : J)
                candidates.insert(nu - rs.cartan().col(j));
        }
        std::vector<IntVector> next;
        for (const IntVector& nu : candidates) {
            long long num = 0;
            for (int k : levi) {
                const Root& beta = rs.positive_root(k);
                for (IntVector up = nu + beta.weight;; up += beta.weight) {
                    const long long m = out.multiplicity(up);
                    if (m == 0)
                        break;
                    num += m * rs.inner_scaled(up, beta.weight);
                }
            }
            num *= 2;
            const long long den = top - rs.inner_scaled(nu + rho, nu + rho);
            if (den == 0) {
                if (num != 0)
                    throw InternalError("Freudenthal recursion hit a zero denominator");
                continue;
            }
            if (num % den != 0)
                throw InternalError("Freudenthal recursion produced a non-integer multiplicity");
            const long long m = num / den;
            if (m < 0)
                throw InternalError("Freudenthal recursion produced a negative multiplicity");
            if (m > 0) {
                out.add(nu, m);
                next.push_back(nu);
            }
        }
        level = std::move(next);
    }

    if (out.dimension() != levi_weyl_dimension(rs, mu, J))
        throw InternalError("Freudenthal total dimension disagrees with the Weyl dimension formula");
    return out;
}

FormalCharacter euler_induction(const RootSystem& rs, const FormalCharacter& chi, const std::vector<int>& J)
{
    if (J.empty())
        return chi;
    std::map<IntVector, FormalCharacter, LexLess> cache;
    FormalCharacter out;
    const std::size_t bound = levi_positive_roots(rs, J).size();
    for (const auto& [mu, c] : chi) {
        IntVector nu = mu;
        long long sign = 1;
        bool singular = false;
        for (std::size_t steps = 0;; ++steps) {
            int move = -1;
            for (int j : J) {
                if (nu[j] + 1 == 0) {
                    singular = true;
                    break;
                }
                if (nu[j] + 1 < 0 && move < 0)
                    move = j;
            }
            if (singular || move < 0)
                break;
            if (steps >= bound)
                throw InternalError("dominant correction did not terminate");
            nu = rs.reflect_weight(move, nu + rs.rho()) - rs.rho();
            sign = -sign;
        }
        if (singular)
            continue;
        auto it = cache.find(nu);
        if (it == cache.end())
            it = cache.emplace(nu, levi_simple_character(rs, nu, J)).first;
        out += (sign * c) * it->second;
    }
    return out;
}

FormalCharacter frobenius_twist(const FormalCharacter& chi, int m)
{
    if (m < 1)
        throw PreconditionError("Frobenius twist requires m >= 1");
    FormalCharacter out;
    for (const auto& [w, c] : chi)
        out.add(w * m, c);
    return out;
}

std::vector<FormalCharacter> symmetric_characters(const RootSystem& rs, const std::vector<int>& roots, int max_degree)
{
    if (max_degree < 0)
        throw PreconditionError("symmetric power degree must be non-negative");
    std::vector<FormalCharacter> dp(static_cast<std::size_t>(max_degree) + 1);
    dp[0] = FormalCharacter::trivial(rs.rank());
    for (int k : roots) {
        const IntVector shift = -rs.positive_root(k).weight;
        for (std::size_t d = 1; d < dp.size(); ++d)
            dp[d] += dp[d - 1] * FormalCharacter::point(shift);
    }
    return dp;
}

FormalCharacter symmetric_character(const RootSystem& rs, const std::vector<int>& roots, int degree)
{
    return symmetric_characters(rs, roots, degree).back();
}

FormalCharacter apply_weyl(const WeylElement& w, const FormalCharacter& chi)
{
    FormalCharacter out;
    for (const auto& [mu, c] : chi)
        out.add(w.apply(mu), c);
    return out;
}

} // namespace nilcoh
