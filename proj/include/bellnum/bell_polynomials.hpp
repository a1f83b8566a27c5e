#pragma once

#include "bellnum/exact.hpp"

#include <span>
#include <vector>

namespace bellnum {

/// One index of the partial-Bell-polynomial sum: multiplicities
/// (l_1, ..., l_{n-k+1}) with sum_i i*l_i = n and sum_i l_i = k.
struct PartitionVector {
  int n = 0;
  int k = 0;
  std::vector<int> multiplicities;  // multiplicities[i-1] = l_i

  /// True iff both defining constraints hold and the length is n-k+1.
  bool satisfies_constraints() const;

  bool operator==(const PartitionVector&) const = default;
};

/// Every PartitionVector for (n, k), each once, largest part first.
/// Requires 1 <= k <= n.
std::vector<PartitionVector> enumerate_partition_vectors(int n, int k);

/// n! / (prod l_i! * prod (i!)^{l_i}); the count of set partitions of an
/// n-set with block-size profile `vector`. Throws InternalError if the
/// division is not exact.
ExactInt partition_coefficient(const PartitionVector& vector);

/// B_{n,k}(x_1, ..., x_{n-k+1}). `xs` must supply at least n-k+1 values;
/// extra trailing values are ignored.
Rational bell_poly_eval(int n, int k, std::span<const Rational> xs);

/// Checks B_{n,k}(a b x_1, a b^2 x_2, ...) == a^k b^n B_{n,k}(x_1, x_2, ...).
bool bell_poly_scaling_check(int n, int k, const Rational& a, const Rational& b,
                             std::span<const Rational> xs);

/// Checks B_{n,k}(1, ..., 1) == S(n, k) against the Stirling recurrence.
bool bell_poly_ones_is_stirling(int n, int k);

/// n-th derivative of f o h via Faa di Bruno:
/// sum_{k=1}^{n} f^{(k)} B_{n,k}(h', h'', ..., h^{(n-k+1)}).
/// f_derivs[j-1] = f^{(j)}(h(t0)), h_derivs[j-1] = h^{(j)}(t0); both need
/// length >= n.
Rational faa_di_bruno_nth_derivative(std::span<const Rational> f_derivs,
                                     std::span<const Rational> h_derivs, int n);

}  // namespace bellnum
