#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oereo/fib_array.hpp"

using namespace oereo;

namespace {

// Independent oracle: the defining recurrence with memoization,
// f(0,0) = f(1,0) = 1, f(n,k) = f(n-1,k) + f(n-2,k-1), 0 out of range.
Int fib_entry_recurrence(int n, int k) {
  static std::map<std::pair<int, int>, Int> memo;
  if (k < 0 || 2 * k > n) return 0;
  if (n <= 1) return 1;  // forces k == 0 here
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  Int v = fib_entry_recurrence(n - 1, k) + fib_entry_recurrence(n - 2, k - 1);
  memo.emplace(std::pair{n, k}, v);
  return v;
}

}  // namespace

TEST_CASE("fib_entry printed values and boundaries") {
  CHECK(fib_entry(4, 1) == 3);
  CHECK(fib_entry(6, 2) == 6);
  CHECK(fib_entry(17, 0) == 1);
  CHECK(fib_entry(5, 3) == 0);
  CHECK(fib_entry(10, -1) == 0);
  CHECK_THROWS_AS(fib_entry(-1, 0), std::domain_error);
}

TEST_CASE("fib_entry closed form agrees with the recurrence") {
  for (int n = 0; n <= 30; ++n)
    for (int k = -1; k <= n / 2 + 1; ++k)
      CHECK(fib_entry(n, k) == fib_entry_recurrence(n, k));
}

TEST_CASE("fib_row printed rows") {
  CHECK(fib_row(7) == std::vector<Int>{1, 6, 10, 4});
  CHECK(fib_row(0) == std::vector<Int>{1});
  CHECK(fib_row(16) == std::vector<Int>{1, 15, 91, 286, 495, 462, 210, 36, 1});
  CHECK_THROWS_AS(fib_row(-2), std::domain_error);
}

TEST_CASE("fib_number convention and recurrence") {
  CHECK(fib_number(0) == 1);
  CHECK(fib_number(1) == 1);
  CHECK(fib_number(2) == 2);
  CHECK(fib_number(4) == 5);
  CHECK_THROWS_AS(fib_number(-1), std::domain_error);
  for (int n = 2; n <= 60; ++n)
    CHECK(fib_number(n) == fib_number(n - 1) + fib_number(n - 2));
}

TEST_CASE("row sums refine Fibonacci numbers") {
  for (int n = 0; n <= 30; ++n) {
    Int sum = 0;
    for (const Int& v : fib_row(n)) sum += v;
    CHECK(sum == fib_number(n));
  }
  // n = 54 cross-check from the recurrence
  Int sum54 = 0;
  for (const Int& v : fib_row(54)) sum54 += v;
  CHECK(sum54 == fib_number(54));
}

TEST_CASE("terquem_classic_count printed values") {
  CHECK(terquem_classic_count(4, 2) == 3);
  CHECK(terquem_classic_count(4, 0) == 1);
  Int sum = 0;
  for (int m = 0; m <= 4; ++m) sum += terquem_classic_count(4, m);
  CHECK(sum == 8);
  CHECK_THROWS_AS(terquem_classic_count(0, 0), std::domain_error);
  CHECK_THROWS_AS(terquem_classic_count(4, 5), std::domain_error);
  CHECK_THROWS_AS(terquem_classic_count(4, -1), std::domain_error);
}

TEST_CASE("terquem_classic_count satisfies Riordan's recurrence and row sums") {
  for (int n = 3; n <= 20; ++n)
    for (int m = 1; m <= n - 2; ++m)
      CHECK(terquem_classic_count(n, m) ==
            terquem_classic_count(n - 1, m - 1) + terquem_classic_count(n - 2, m));
  for (int n = 1; n <= 20; ++n) {
    CHECK(terquem_classic_count(n, 0) == 1);
    Int sum = 0;
    for (int m = 0; m <= n; ++m) sum += terquem_classic_count(n, m);
    CHECK(sum == fib_number(n + 1));
  }
}
