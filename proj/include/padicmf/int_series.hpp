#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace padicmf {

/// Exact integer coefficients. 128 bits covers products of the classical
/// Eisenstein series up to q^256; every operation is overflow-checked.
using BigCoeff = __int128;

/// A q-expansion with exact integer coefficients a_0 .. a_{size-1}.
using IntSeries = std::vector<BigCoeff>;

/// sigma_k(n) = sum of d^k over the divisors d of n.
BigCoeff sigma(std::uint64_t n, unsigned k);

IntSeries int_e2(int length);
/// 1 + c * sum sigma_{k-1}(n) q^n. k must be even and >= 4.
IntSeries int_eisenstein(unsigned k, std::int64_t c, int length);
/// Delta = q prod (1 - q^n)^24.
IntSeries int_delta(int length);

/// -2k/B_k when it is an integer (k = 4, 6, 8, 10, 14); throws DomainError otherwise.
std::int64_t standard_eisenstein_constant(unsigned k);

IntSeries int_add(const IntSeries& a, const IntSeries& b);
IntSeries int_sub(const IntSeries& a, const IntSeries& b);
IntSeries int_mul(const IntSeries& a, const IntSeries& b);
IntSeries int_scale(const IntSeries& a, BigCoeff c);
IntSeries int_theta(const IntSeries& a);

std::string to_string(BigCoeff x);

}  // namespace padicmf
