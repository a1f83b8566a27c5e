#include "bellnum/combinatorial_tables.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace bellnum {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw DomainError(message);
  }
}

std::string cell(int n, int k) {
  return "(" + std::to_string(n) + ", " + std::to_string(k) + ")";
}

ExactInt power(long base, int exponent) {
  ExactInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return result;
}

// Multiplies poly (constant term first) by (x + shift) in place.
void multiply_by_linear(std::vector<ExactInt>& poly, long shift) {
  poly.emplace_back(0);
  for (std::size_t i = poly.size() - 1; i > 0; --i) {
    poly[i] = poly[i - 1] + shift * poly[i];
  }
  poly[0] *= shift;
}

}  // namespace

ExactInt factorial(int n) {
  require(n >= 0, "factorial of negative number " + std::to_string(n));
  ExactInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

ExactInt binomial(int n, int k) {
  require(n >= 0, "binomial with negative n " + std::to_string(n));
  if (k < 0 || k > n) {
    return 0;
  }
  ExactInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

ExactInt stirling2_explicit(int n, int k) {
  require(k >= 1 && k <= n, "stirling2_explicit needs 1 <= k <= n, got " + cell(n, k));
  ExactInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    ExactInt term = binomial(k, i) * power(k - i, n);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return divide_exact(sum, factorial(k), "stirling2_explicit");
}

std::vector<ExactInt> stirling2_row(int n) {
  require(n >= 0, "stirling2_row of negative n " + std::to_string(n));
  std::vector<ExactInt> row(static_cast<std::size_t>(n) + 1, ExactInt(0));
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    // In-place update from high k to low keeps row[k-1] at its old value.
    for (int k = m; k >= 1; --k) {
      row[k] = k * row[k] + row[k - 1];
    }
    row[0] = 0;
  }
  return row;
}

namespace {

std::mutex& shared_stirling_mutex() {
  static std::mutex mutex;
  return mutex;
}

TriangleTable& shared_stirling_table() {
  static TriangleTable table(TriangleTable::Kind::stirling2);
  return table;
}

}  // namespace

ExactInt stirling2_recurrence(int n, int k) {
  require(k >= 0 && k <= n, "stirling2_recurrence needs 0 <= k <= n, got " + cell(n, k));
  std::lock_guard<std::mutex> lock(shared_stirling_mutex());
  return shared_stirling_table().entry(n, k);
}

ExactInt lah(int n, int k) {
  require(k >= 1 && k <= n, "lah needs 1 <= k <= n, got " + cell(n, k));
  return binomial(n - 1, k - 1) *
         divide_exact(factorial(n), factorial(k), "lah n!/k!");
}

ExactInt lah_row_sum(int k) {
  require(k >= 1, "lah_row_sum needs k >= 1, got " + std::to_string(k));
  ExactInt sum = 0;
  for (int l = 1; l <= k; ++l) {
    sum += lah(k, l);
  }
  return sum;
}

const ExactInt TriangleTable::zero_ = 0;

TriangleTable::TriangleTable(Kind kind) : kind_(kind) {
  rows_.push_back({ExactInt(1)});
}

void TriangleTable::grow_to(int n) {
  require(n >= 0, "triangle row must be nonnegative, got " + std::to_string(n));
  while (max_row() < n) {
    const int m = max_row() + 1;
    std::vector<ExactInt> next(static_cast<std::size_t>(m));
    if (m == 1) {
      next[0] = 1;
    } else {
      const std::vector<ExactInt>& prev = rows_.back();
      // prev[k-1] holds T(m-1, k) for 1 <= k <= m-1.
      for (int k = 1; k <= m; ++k) {
        const ExactInt above = k <= m - 1 ? prev[k - 1] : zero_;
        const ExactInt above_left = k >= 2 ? prev[k - 2] : zero_;
        if (kind_ == Kind::stirling2) {
          next[k - 1] = k * above + above_left;
        } else {
          // L(m,k) = (m-1+k) L(m-1,k) + L(m-1,k-1)
          next[k - 1] = (m - 1 + k) * above + above_left;
        }
      }
    }
    rows_.push_back(std::move(next));
  }
}

const ExactInt& TriangleTable::at(int n, int k) const {
  require(n >= 0 && k >= 0 && k <= n, "triangle index out of range " + cell(n, k));
  require(n <= max_row(), "triangle row " + std::to_string(n) + " not built");
  if (n == 0) {
    return rows_[0][0];
  }
  if (k == 0) {
    return zero_;
  }
  return rows_[n][k - 1];
}

const ExactInt& TriangleTable::entry(int n, int k) {
  grow_to(n);
  return at(n, k);
}

const std::vector<ExactInt>& TriangleTable::row(int n) {
  require(n >= 1, "triangle row() needs n >= 1, got " + std::to_string(n));
  grow_to(n);
  return rows_[n];
}

std::string_view to_string(BellMethod method) {
  switch (method) {
    case BellMethod::classic:
      return "classic";
    case BellMethod::lah_stirling:
      return "lah-stirling";
    case BellMethod::triangle:
      return "triangle";
    case BellMethod::enumerate:
      return "enumerate";
  }
  return "unknown";
}

std::optional<BellMethod> parse_bell_method(std::string_view text) {
  if (text == "classic") return BellMethod::classic;
  if (text == "lah-stirling" || text == "lah_stirling") return BellMethod::lah_stirling;
  if (text == "triangle") return BellMethod::triangle;
  if (text == "enumerate") return BellMethod::enumerate;
  return std::nullopt;
}

ExactInt bell_classic(int n) {
  require(n >= 0, "bell_classic of negative n " + std::to_string(n));
  if (n == 0) {
    return 1;
  }
  const std::vector<ExactInt> row = stirling2_row(n);
  ExactInt sum = 0;
  for (int k = 1; k <= n; ++k) {
    sum += row[k];
  }
  return sum;
}

ExactInt bell_lah_stirling(int n) {
  require(n >= 1, "bell_lah_stirling needs n >= 1, got " + std::to_string(n));
  const std::vector<ExactInt> row = stirling2_row(n);
  ExactInt sum = 0;
  for (int k = 1; k <= n; ++k) {
    ExactInt term = lah_row_sum(k) * row[k];
    if ((n - k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<ExactInt> bell_lah_stirling_upto(int max_n) {
  require(max_n >= 1, "bell_lah_stirling_upto needs max_n >= 1");
  std::vector<ExactInt> row_sums(static_cast<std::size_t>(max_n) + 1);
  for (int k = 1; k <= max_n; ++k) {
    row_sums[k] = lah_row_sum(k);
  }
  TriangleTable stirling(TriangleTable::Kind::stirling2);
  std::vector<ExactInt> bells;
  bells.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<ExactInt>& row = stirling.row(n);
    ExactInt sum = 0;
    for (int k = 1; k <= n; ++k) {
      if ((n - k) % 2 == 0) {
        sum += row_sums[k] * row[k - 1];
      } else {
        sum -= row_sums[k] * row[k - 1];
      }
    }
    bells.push_back(std::move(sum));
  }
  return bells;
}

ExactInt bell_triangle(int n) {
  require(n >= 0, "bell_triangle of negative n " + std::to_string(n));
  std::vector<ExactInt> row{ExactInt(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<ExactInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const ExactInt& above : row) {
      next.push_back(next.back() + above);
    }
    row = std::move(next);
  }
  return row.front();
}

ExactInt bell_enumeration_oracle(int n) {
  require(n >= 0 && n <= kEnumerationMaxN,
          "bell_enumeration_oracle needs 0 <= n <= " + std::to_string(kEnumerationMaxN) +
              ", got " + std::to_string(n));
  if (n == 0) {
    return 1;
  }
  // a[0] = 0 and a[i] <= 1 + max(a[0..i-1]); prefix_max[i] = max(a[0..i]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  unsigned long count = 0;
  while (true) {
    ++count;
    int i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return ExactInt(count);
}

ExactInt bell(int n, BellMethod method) {
  switch (method) {
    case BellMethod::classic:
      return bell_classic(n);
    case BellMethod::lah_stirling:
      return bell_lah_stirling(n);
    case BellMethod::triangle:
      return bell_triangle(n);
    case BellMethod::enumerate:
      return bell_enumeration_oracle(n);
  }
  throw DomainError("unknown Bell method");
}

std::vector<ExactInt> rising_factorial_poly(int n) {
  require(n >= 0, "rising factorial of negative order");
  std::vector<ExactInt> poly{ExactInt(1)};
  for (int i = 0; i < n; ++i) {
    multiply_by_linear(poly, i);
  }
  return poly;
}

std::vector<ExactInt> falling_factorial_poly(int n) {
  require(n >= 0, "falling factorial of negative order");
  std::vector<ExactInt> poly{ExactInt(1)};
  for (int i = 0; i < n; ++i) {
    multiply_by_linear(poly, -i);
  }
  return poly;
}

bool lah_connection_check(int n) {
  require(n >= 1, "lah_connection_check needs n >= 1, got " + std::to_string(n));
  const std::vector<ExactInt> rising = rising_factorial_poly(n);
  std::vector<ExactInt> combined(rising.size(), ExactInt(0));
  for (int k = 1; k <= n; ++k) {
    const ExactInt weight = lah(n, k);
    const std::vector<ExactInt> falling = falling_factorial_poly(k);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      combined[i] += weight * falling[i];
    }
  }
  return combined == rising;
}

}  // namespace bellnum
