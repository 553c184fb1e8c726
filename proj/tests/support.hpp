#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homconf/orbit.hpp"

namespace homconf::testing {

// Categories are expensive enough to share between test cases.
inline const OrbitCategory& category(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<OrbitCategory>> cache;
  auto& slot = cache[spec];
  if (!slot) slot = std::make_unique<OrbitCategory>(OrbitCategory::build(parse_quiver(spec)));
  return *slot;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

struct Exponents {
  int h;
  std::vector<int> e;
};

// Independent copy of the exponent tables.
inline Exponents exponents_oracle(char type, int n) {
  switch (type) {
    case 'A': {
      std::vector<int> e;
      for (int i = 1; i <= n; ++i) e.push_back(i);
      return {n + 1, e};
    }
    case 'D': {
      std::vector<int> e;
      for (int i = 1; i <= 2 * n - 3; i += 2) e.push_back(i);
      e.push_back(n - 1);
      return {2 * n - 2, e};
    }
    default:
      if (n == 6) return {12, {1, 4, 5, 7, 8, 11}};
      if (n == 7) return {18, {1, 5, 7, 9, 11, 13, 17}};
      return {30, {1, 7, 11, 13, 17, 19, 23, 29}};
  }
}

// prod (e_i + h + shift) / (e_i + 1), evaluated with exact cancellation.
inline std::uint64_t product_formula(char type, int n, int shift) {
  const auto [h, e] = exponents_oracle(type, n);
  unsigned __int128 num = 1, den = 1;
  for (int x : e) {
    num *= static_cast<unsigned>(x + h + shift);
    den *= static_cast<unsigned>(x + 1);
  }
  return static_cast<std::uint64_t>(num / den);
}

}  // namespace homconf::testing
