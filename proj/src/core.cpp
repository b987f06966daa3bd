#include "nilcoh/core.hpp"

#include <sstream>

namespace nilcoh {

std::string format_vector(const IntVector& v)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    return os.str();
}

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

} // namespace nilcoh
