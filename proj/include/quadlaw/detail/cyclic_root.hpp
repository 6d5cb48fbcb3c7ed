#pragma once

#include <cstdint>
#include <optional>

namespace quadlaw::detail {

/// Cube root inside a finite cyclic group of the given order (3 | order),
/// Tonelli-Shanks style: only a discrete log inside the Sylow 3-subgroup is
/// needed. `non_cube` must satisfy non_cube^(order/3) != 1.
///
/// T needs operator*, operator== and an ADL-visible power(T, uint64).
template <class T>
std::optional<T> cyclic_cube_root(const T& y, const T& one, std::uint64_t order,
                                  const T& non_cube) {
  if (!(power(y, order / 3) == one)) return std::nullopt;

  std::uint64_t t = order;
  unsigned e = 0;
  while (t % 3 == 0) {
    t /= 3;
    ++e;
  }
  std::uint64_t three_e = order / t;

  // u = 3^{-1} mod t; then x0^3 = y * (element of the Sylow 3-subgroup).
  std::uint64_t u = 0;
  if (t > 1) {
    while ((3 * u) % t != 1) ++u;
  }
  const T x0 = power(y, u);
  const T y_inv = power(y, order - 1);
  const T err = x0 * x0 * x0 * y_inv;

  const T z = power(non_cube, t);  // generator of the Sylow 3-subgroup
  const T zeta = power(z, three_e / 3);
  const T zeta2 = zeta * zeta;

  // err = z^k, read k base 3 digit by digit.
  std::uint64_t k = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < e; ++i) {
    const T reduced = err * power(z, (three_e - k) % three_e);
    const T r = power(reduced, three_e / (place * 3));
    std::uint64_t digit = 0;
    if (r == one) {
      digit = 0;
    } else if (r == zeta) {
      digit = 1;
    } else if (r == zeta2) {
      digit = 2;
    } else {
      return std::nullopt;
    }
    k += digit * place;
    place *= 3;
  }
  if (k % 3 != 0) return std::nullopt;
  const T h = power(z, (three_e - (k / 3) % three_e) % three_e);
  return x0 * h;
}

}  // namespace quadlaw::detail
