#include "bellnum/bell_polynomials.hpp"

#include "bellnum/combinatorial_tables.hpp"

#include <algorithm>
#include <string>

namespace bellnum {
namespace {

void require_cell(int n, int k, const char* op) {
  if (k < 1 || k > n) {
    throw DomainError(std::string(op) + " needs 1 <= k <= n, got (" + std::to_string(n) +
                      ", " + std::to_string(k) + ")");
  }
}

// Assigns multiplicities for part sizes part..1, given `sum` still to cover
// with exactly `count` parts.
void descend(int part, int sum, int count, PartitionVector& current,
             std::vector<PartitionVector>& out) {
  if (part == 1) {
    if (sum == count) {
      current.multiplicities[0] = count;
      out.push_back(current);
      current.multiplicities[0] = 0;
    }
    return;
  }
  const int most = std::min(count, sum / part);
  for (int uses = most; uses >= 0; --uses) {
    const int rest_sum = sum - uses * part;
    const int rest_count = count - uses;
    // Remaining parts are each in [1, part-1].
    if (rest_count > rest_sum || rest_sum > rest_count * (part - 1)) {
      continue;
    }
    current.multiplicities[part - 1] = uses;
    descend(part - 1, rest_sum, rest_count, current, out);
    current.multiplicities[part - 1] = 0;
  }
}

}  // namespace

bool PartitionVector::satisfies_constraints() const {
  if (k < 1 || k > n || static_cast<int>(multiplicities.size()) != n - k + 1) {
    return false;
  }
  long weighted = 0;
  long count = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 0) {
      return false;
    }
    weighted += static_cast<long>(i + 1) * multiplicities[i];
    count += multiplicities[i];
  }
  return weighted == n && count == k;
}

std::vector<PartitionVector> enumerate_partition_vectors(int n, int k) {
  require_cell(n, k, "enumerate_partition_vectors");
  PartitionVector current{n, k, std::vector<int>(static_cast<std::size_t>(n - k + 1), 0)};
  std::vector<PartitionVector> out;
  descend(n - k + 1, n, k, current, out);
  for (const PartitionVector& vector : out) {
    if (!vector.satisfies_constraints()) {
      throw InternalError("enumerate_partition_vectors produced an invalid vector");
    }
  }
  return out;
}

ExactInt partition_coefficient(const PartitionVector& vector) {
  ExactInt denominator = 1;
  for (std::size_t i = 0; i < vector.multiplicities.size(); ++i) {
    const int uses = vector.multiplicities[i];
    if (uses == 0) {
      continue;
    }
    ExactInt block_factorial_power;
    mpz_pow_ui(block_factorial_power.get_mpz_t(),
               factorial(static_cast<int>(i + 1)).get_mpz_t(),
               static_cast<unsigned long>(uses));
    denominator *= factorial(uses) * block_factorial_power;
  }
  return divide_exact(factorial(vector.n), denominator, "partial Bell coefficient");
}

Rational bell_poly_eval(int n, int k, std::span<const Rational> xs) {
  require_cell(n, k, "bell_poly_eval");
  const std::size_t needed = static_cast<std::size_t>(n - k + 1);
  if (xs.size() < needed) {
    throw DomainError("bell_poly_eval needs " + std::to_string(needed) + " arguments, got " +
                      std::to_string(xs.size()));
  }
  Rational sum = 0;
  for (const PartitionVector& vector : enumerate_partition_vectors(n, k)) {
    Rational term(partition_coefficient(vector));
    for (std::size_t i = 0; i < needed; ++i) {
      if (vector.multiplicities[i] != 0) {
        term *= pow(xs[i], vector.multiplicities[i]);
      }
    }
    sum += term;
  }
  return sum;
}

bool bell_poly_scaling_check(int n, int k, const Rational& a, const Rational& b,
                             std::span<const Rational> xs) {
  require_cell(n, k, "bell_poly_scaling_check");
  const std::size_t needed = static_cast<std::size_t>(n - k + 1);
  if (xs.size() < needed) {
    throw DomainError("bell_poly_scaling_check needs " + std::to_string(needed) + " arguments");
  }
  std::vector<Rational> scaled(needed);
  Rational b_power = b;
  for (std::size_t i = 0; i < needed; ++i) {
    scaled[i] = a * b_power * xs[i];
    b_power *= b;
  }
  const Rational lhs = bell_poly_eval(n, k, scaled);
  const Rational rhs = pow(a, k) * pow(b, n) * bell_poly_eval(n, k, xs);
  return lhs == rhs;
}

bool bell_poly_ones_is_stirling(int n, int k) {
  require_cell(n, k, "bell_poly_ones_is_stirling");
  const std::vector<Rational> ones(static_cast<std::size_t>(n - k + 1), Rational(1));
  const Rational value = bell_poly_eval(n, k, ones);
  return is_integer(value) && value.get_num() == stirling2_recurrence(n, k);
}

Rational faa_di_bruno_nth_derivative(std::span<const Rational> f_derivs,
                                     std::span<const Rational> h_derivs, int n) {
  if (n < 1) {
    throw DomainError("faa_di_bruno_nth_derivative needs n >= 1");
  }
  const std::size_t needed = static_cast<std::size_t>(n);
  if (f_derivs.size() < needed || h_derivs.size() < needed) {
    throw DomainError("faa_di_bruno_nth_derivative needs " + std::to_string(n) +
                      " derivatives of each function");
  }
  Rational sum = 0;
  for (int k = 1; k <= n; ++k) {
    sum += f_derivs[k - 1] * bell_poly_eval(n, k, h_derivs.first(needed - k + 1));
  }
  return sum;
}

}  // namespace bellnum
