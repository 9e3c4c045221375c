#pragma once

#include "bpu/galgebra.h"

#include <cstdint>
#include <span>

namespace bpu {

bool is_odd_prime(std::int64_t p);

/// p-primary factor of m: the largest power of p dividing m (m > 0).
std::int64_t p_primary_part(std::int64_t m, std::int64_t p);

std::int64_t int_pow(std::int64_t base, unsigned exp);

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

/// C(n, k) mod p by Lucas' theorem, in [0, p).
std::int64_t binomial_mod_p(std::int64_t n, std::int64_t k, std::int64_t p);

/// Multinomial n! / (k_0! k_1! ...) mod p as a product of Lucas binomials;
/// requires sum(k) == n.
std::int64_t multinomial_mod_p(std::int64_t n, std::span<const std::int64_t> parts, std::int64_t p);

}  // namespace bpu
