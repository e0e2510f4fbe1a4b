#include "pigeon/counts.hpp"

#include <stdexcept>
#include <string>

namespace pigeon {
namespace {

void require_n(std::int64_t n) {
  if (n < 2 || n > kMaxCountN)
    throw std::invalid_argument("n must be in [2, " + std::to_string(kMaxCountN) + "], got " +
                                std::to_string(n));
}

std::int64_t exact_div(std::int64_t numerator, std::int64_t denominator) {
  if (numerator % denominator != 0)
    throw std::logic_error("closed form is not integral: " + std::to_string(numerator) + "/" +
                           std::to_string(denominator));
  return numerator / denominator;
}

}  // namespace

std::int64_t f_group(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k == 1) return 1;
  return (7 * k) / 2 - 4;
}

std::int64_t count_ours(std::int64_t n) {
  require_n(n);
  // 5/2 n^3 - 35/8 n^2 + 11/4 n + 2      (n even)
  // 5/2 n^3 - 35/8 n^2 + 3 n + 15/8      (n odd)
  const std::int64_t n2 = n * n, n3 = n2 * n;
  const std::int64_t scaled =
      n % 2 == 0 ? 20 * n3 - 35 * n2 + 22 * n + 16 : 20 * n3 - 35 * n2 + 24 * n + 15;
  return exact_div(scaled, 8);
}

CountBreakdown count_ours_breakdown(std::int64_t n) {
  require_n(n);
  CountBreakdown b;
  for (std::int64_t k = n - 1; k >= 1; --k) {
    IterationCount it{k, k * (4 * k + 2), k * f_group(k), k + 1};
    b.total += it.total();
    b.per_iteration.push_back(it);
  }
  b.total += 1;
  return b;
}

std::int64_t count_cook(std::int64_t n) {
  require_n(n);
  // 1/4 n^4 + 7/6 n^3 + 1/4 n^2 - 2/3 n
  const std::int64_t n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  return exact_div(3 * n4 + 14 * n3 + 3 * n2 - 8 * n, 12);
}

CountBreakdown count_cook_breakdown(std::int64_t n) {
  require_n(n);
  CountBreakdown b;
  for (std::int64_t k = n - 1; k >= 1; --k) {
    IterationCount it{k, 4 * (k + 1) * k, (k + 1) * k * k, k + 1};
    b.total += it.total();
    b.per_iteration.push_back(it);
  }
  b.total += 1;
  return b;
}

}  // namespace pigeon
