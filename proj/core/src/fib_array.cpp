#include "oereo/fib_array.hpp"

#include <stdexcept>

namespace oereo {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // divides exactly: result is C(n-k+i, i)
  }
  return result;
}

Int fib_entry(int n, int k) {
  if (n < 0) throw std::domain_error("fib_entry: n must be nonnegative");
  if (k < 0 || 2 * k > n) return 0;
  return binomial(n - k, k);
}

std::vector<Int> fib_row(int n) {
  if (n < 0) throw std::domain_error("fib_row: n must be nonnegative");
  std::vector<Int> row;
  row.reserve(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) row.push_back(fib_entry(n, k));
  return row;
}

Int fib_number(int n) {
  if (n < 0) throw std::domain_error("fib_number: n must be nonnegative");
  Int prev = 1;  // f(0)
  Int cur = 1;   // f(1)
  for (int i = 2; i <= n; ++i) {
    Int next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int terquem_classic_count(int n, int m) {
  if (n < 1) throw std::domain_error("terquem_classic_count: n must be positive");
  if (m < 0 || m > n) throw std::domain_error("terquem_classic_count: require 0 <= m <= n");
  return binomial((n + m) / 2, m);
}

}  // namespace oereo
