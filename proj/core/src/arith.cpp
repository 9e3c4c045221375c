#include "bpu/arith.h"

#include <numeric>

namespace bpu {

bool is_odd_prime(std::int64_t p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t p_primary_part(std::int64_t m, std::int64_t p)
{
    if (m <= 0)
        throw Error("p_primary_part: m must be positive");
    std::int64_t q = 1;
    while (m % p == 0) {
        m /= p;
        q *= p;
    }
    return q;
}

std::int64_t int_pow(std::int64_t base, unsigned exp)
{
    std::int64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::int64_t binomial_mod_p(std::int64_t n, std::int64_t k, std::int64_t p)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    while (n > 0 || k > 0) {
        std::int64_t nd = n % p, kd = k % p;
        if (kd > nd)
            return 0;
        Integer small = binomial(nd, kd) % p;
        r = (r * small.convert_to<std::int64_t>()) % p;
        n /= p;
        k /= p;
    }
    return r;
}

std::int64_t multinomial_mod_p(std::int64_t n, std::span<const std::int64_t> parts, std::int64_t p)
{
    std::int64_t total = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    if (total != n)
        throw Error("multinomial_mod_p: parts do not sum to n");
    std::int64_t r = 1, rest = n;
    for (auto k : parts) {
        r = (r * binomial_mod_p(rest, k, p)) % p;
        if (r == 0)
            return 0;
        rest -= k;
    }
    return r;
}

}  // namespace bpu
