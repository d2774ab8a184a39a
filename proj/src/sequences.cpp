#include "patternsort/sequences.hpp"

#include <string>

#include "patternsort/error.hpp"

namespace patternsort {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt catalan(std::size_t n) { return binomial(2 * n, n) / (n + 1); }

BigInt narayana(std::size_t n, std::size_t k) {
  if (n == 0 && k == 0) return 1;
  require(k >= 1 && k <= n, "narayana: k=" + std::to_string(k) + " outside 1.." +
                                std::to_string(n));
  return binomial(n, k) * binomial(n, k - 1) / n;
}

BigInt motzkin(std::size_t n) {
  BigInt sum = 0;
  for (std::size_t k = 0; 2 * k <= n; ++k) sum += binomial(n, 2 * k) * catalan(k);
  return sum;
}

BigInt a007317(std::size_t n) {
  if (n == 0) return 0;
  BigInt sum = 0;
  for (std::size_t k = 0; k < n; ++k) sum += binomial(n - 1, k) * catalan(k);
  return sum;
}

BigInt catalan_double_partial_sums(std::size_t n) {
  BigInt total = 1;
  BigInt partial = 0;
  for (std::size_t k = 1; k < n; ++k) {
    partial += catalan(k);
    total += partial;
  }
  return total;
}

BigInt max_distribution_formula(std::size_t n, std::size_t k) {
  require(k <= n, "max_distribution_formula: k exceeds n");
  BigInt sum = 0;
  for (std::size_t j = k; j <= n; ++j) {
    // N(j,k) vanishes outside 1 <= k <= j except N(0,0) = 1.
    if ((k == 0 && j != 0) || k > j) continue;
    sum += binomial(n, j) * narayana(j, k);
  }
  return sum;
}

namespace {

using Series = std::vector<BigInt>;

/// 1 / a for a power series with constant term 1, truncated to a.size() terms.
Series invert(const Series& a) {
  Series b(a.size(), 0);
  if (a.empty()) return b;
  b[0] = 1;
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigInt s = 0;
    for (std::size_t i = 1; i <= n; ++i) s += a[i] * b[n - i];
    b[n] = -s;
  }
  return b;
}

}  // namespace

std::vector<BigInt> cf_series(std::size_t depth, CfVariant variant, std::size_t terms) {
  require(depth >= 1, "cf_series: depth must be at least 1");
  const int head = variant == CfVariant::A007317 ? 2 : 1;
  const int tail = head + 1;
  Series t(terms, 0);
  for (std::size_t level = depth; level >= 1; --level) {
    const int c = level == 1 ? head : tail;
    Series denom(terms, 0);
    if (terms > 0) denom[0] = 1;
    if (terms > 1) denom[1] = -c;
    for (std::size_t i = 2; i < terms; ++i) denom[i] = -t[i - 2];
    t = invert(denom);
  }
  return t;
}

void write_bfile(std::ostream& out, const std::vector<BigInt>& values, std::size_t offset) {
  for (std::size_t i = 0; i < values.size(); ++i) out << (offset + i) << ' ' << values[i] << '\n';
}

}  // namespace patternsort
