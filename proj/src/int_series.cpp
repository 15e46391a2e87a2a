#include "padicmf/int_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicmf/error.hpp"

namespace padicmf {

namespace {

BigCoeff checked_mul(BigCoeff a, BigCoeff b) {
  BigCoeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer series: overflow");
  return r;
}

BigCoeff checked_add(BigCoeff a, BigCoeff b) {
  BigCoeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer series: overflow");
  return r;
}

BigCoeff int_pow(std::uint64_t base, unsigned k) {
  BigCoeff r = 1;
  for (unsigned i = 0; i < k; ++i) r = checked_mul(r, static_cast<BigCoeff>(base));
  return r;
}

}  // namespace

BigCoeff sigma(std::uint64_t n, unsigned k) {
  if (n == 0) throw DomainError("sigma: n must be positive");
  BigCoeff s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s = checked_add(s, int_pow(d, k));
    if (d != n / d) s = checked_add(s, int_pow(n / d, k));
  }
  return s;
}

IntSeries int_e2(int length) {
  IntSeries e(static_cast<std::size_t>(length), 0);
  e[0] = 1;
  for (int n = 1; n < length; ++n) e[static_cast<std::size_t>(n)] = checked_mul(-24, sigma(static_cast<std::uint64_t>(n), 1));
  return e;
}

IntSeries int_eisenstein(unsigned k, std::int64_t c, int length) {
  if (k < 4 || k % 2 != 0) {
    throw DomainError("eisenstein: weight must be even and >= 4, got " + std::to_string(k));
  }
  IntSeries e(static_cast<std::size_t>(length), 0);
  e[0] = 1;
  for (int n = 1; n < length; ++n) {
    e[static_cast<std::size_t>(n)] = checked_mul(c, sigma(static_cast<std::uint64_t>(n), k - 1));
  }
  return e;
}

IntSeries int_delta(int length) {
  // c = prod (1 - q^n)^24 through its logarithmic derivative:
  //   n c_n = -24 sum_{k=1}^{n} sigma_1(k) c_{n-k}.
  // The intermediate values stay of the size of the final coefficients.
  IntSeries c(static_cast<std::size_t>(length), 0);
  c[0] = 1;
  for (int n = 1; n < length; ++n) {
    BigCoeff acc = 0;
    for (int k = 1; k <= n; ++k) {
      acc = checked_add(acc, checked_mul(sigma(static_cast<std::uint64_t>(k), 1),
                                         c[static_cast<std::size_t>(n - k)]));
    }
    acc = checked_mul(acc, -24);
    c[static_cast<std::size_t>(n)] = acc / n;
  }
  IntSeries d(static_cast<std::size_t>(length), 0);
  for (int i = 1; i < length; ++i) d[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)];
  return d;
}

std::int64_t standard_eisenstein_constant(unsigned k) {
  switch (k) {
    case 4: return 240;
    case 6: return -504;
    case 8: return 480;
    case 10: return -264;
    case 14: return -24;
    default:
      throw DomainError("standard Eisenstein normalization is not integral for weight " +
                        std::to_string(k));
  }
}

IntSeries int_add(const IntSeries& a, const IntSeries& b) {
  IntSeries r(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntSeries int_sub(const IntSeries& a, const IntSeries& b) {
  return int_add(a, int_scale(b, -1));
}

IntSeries int_mul(const IntSeries& a, const IntSeries& b) {
  IntSeries r(std::min(a.size(), b.size()), 0);
  for (std::size_t n = 0; n < r.size(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) r[n] = checked_add(r[n], checked_mul(a[i], b[n - i]));
  }
  return r;
}

IntSeries int_scale(const IntSeries& a, BigCoeff c) {
  IntSeries r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], c);
  return r;
}

IntSeries int_theta(const IntSeries& a) {
  IntSeries r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], static_cast<BigCoeff>(i));
  return r;
}

std::string to_string(BigCoeff x) {
  if (x == 0) return "0";
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace padicmf
