#pragma once

#include "bellnum/exact.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bellnum {

/// Largest n accepted by the brute-force partition counter.
inline constexpr int kEnumerationMaxN = 12;

ExactInt factorial(int n);

/// C(n, k); zero when k < 0 or k > n.
ExactInt binomial(int n, int k);

/// S(n, k) from the alternating inclusion-exclusion sum, divided once by k!.
/// Requires 1 <= k <= n.
ExactInt stirling2_explicit(int n, int k);

/// S(n, k) from S(n,k) = k S(n-1,k) + S(n-1,k-1), memoized in a shared table.
/// Defined for 0 <= k <= n with S(0,0) = 1 and S(n,0) = 0 for n >= 1.
ExactInt stirling2_recurrence(int n, int k);

/// Row n of the Stirling triangle, S(n,0..n), computed fresh without the
/// shared memo.
std::vector<ExactInt> stirling2_row(int n);

/// Closed form C(n-1,k-1) n!/k!. Requires 1 <= k <= n.
ExactInt lah(int n, int k);

/// Sum of L(k, l) over 1 <= l <= k. Requires k >= 1.
ExactInt lah_row_sum(int k);

/// Lower-triangular table grown row by row on demand.
///
/// Row n holds entries k = 1..n (n entries); row 0 is the conventional
/// single entry T(0,0) = 1 and is not part of the k >= 1 domain. Growth
/// mutates the object, so a table shared between threads must be fully
/// built before it is read concurrently.
class TriangleTable {
public:
  enum class Kind { stirling2, lah };

  explicit TriangleTable(Kind kind);

  Kind kind() const { return kind_; }

  /// Highest row materialized so far.
  int max_row() const { return static_cast<int>(rows_.size()) - 1; }

  /// Entry (n, k); grows the table through row n if needed. k = 0 yields
  /// the boundary convention (1 at n = 0, otherwise 0).
  const ExactInt& entry(int n, int k);

  /// Entry (n, k) of an already-built table; throws DomainError if row n has
  /// not been materialized.
  const ExactInt& at(int n, int k) const;

  /// Row n for n >= 1 as entries k = 1..n.
  const std::vector<ExactInt>& row(int n);

  void grow_to(int n);

private:
  Kind kind_;
  std::vector<std::vector<ExactInt>> rows_;
  static const ExactInt zero_;
};

enum class BellMethod { classic, lah_stirling, triangle, enumerate };

std::string_view to_string(BellMethod method);

/// Accepts "classic", "lah-stirling" (or "lah_stirling"), "triangle",
/// "enumerate".
std::optional<BellMethod> parse_bell_method(std::string_view text);

/// B_n as the Stirling row sum; B_0 = 1.
ExactInt bell_classic(int n);

/// B_n as the alternating Lah/Stirling sum. Requires n >= 1.
ExactInt bell_lah_stirling(int n);

/// B_1..B_max_n by the Lah/Stirling sum, reusing each Lah row sum across n.
/// Element i of the result is B_{i+1}.
std::vector<ExactInt> bell_lah_stirling_upto(int max_n);

/// B_n read off the Peirce (Bell) triangle.
ExactInt bell_triangle(int n);

/// Counts restricted-growth strings of length n. Requires 0 <= n <= 12.
ExactInt bell_enumeration_oracle(int n);

/// Dispatches to one of the methods above. n = 0 under lah_stirling is
/// rejected, like bell_lah_stirling itself.
ExactInt bell(int n, BellMethod method);

/// Expands (x)_n and sum_k L(n,k) <x>_k as integer polynomials and compares
/// them coefficient by coefficient.
bool lah_connection_check(int n);

/// Coefficients (constant term first) of x(x+1)...(x+n-1).
std::vector<ExactInt> rising_factorial_poly(int n);

/// Coefficients (constant term first) of x(x-1)...(x-n+1).
std::vector<ExactInt> falling_factorial_poly(int n);

}  // namespace bellnum
