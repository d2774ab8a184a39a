#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace patternsort {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::size_t n, std::size_t k);
BigInt catalan(std::size_t n);
/// (1/n) C(n,k) C(n,k-1) for 1 <= k <= n; narayana(0, 0) = 1. Other k throw InvalidInput.
BigInt narayana(std::size_t n, std::size_t k);
BigInt motzkin(std::size_t n);
/// sum_{k=0}^{n-1} C(n-1,k) c_k, with a007317(0) = 0.
BigInt a007317(std::size_t n);
/// 1 + sum_{k=1}^{n-1} sum_{j=1}^{k} c_j; the counting sequence of Sort_n(123).
BigInt catalan_double_partial_sums(std::size_t n);

/// sum_{j=k}^{n} C(n,j) N(j,k), for 0 <= k <= n.
BigInt max_distribution_formula(std::size_t n, std::size_t k);

enum class CfVariant { A007317, Catalan };

/// Power series of the continued fraction truncated after `depth` levels, first
/// `terms` coefficients. The head level has denominator 1 - c0 x - x^2 T and every
/// deeper level 1 - c1 x - x^2 T; the innermost T is replaced by 0.
std::vector<BigInt> cf_series(std::size_t depth, CfVariant variant, std::size_t terms);

/// One "n a(n)" line per entry, indices starting at `offset`.
void write_bfile(std::ostream& out, const std::vector<BigInt>& values, std::size_t offset);

}  // namespace patternsort
