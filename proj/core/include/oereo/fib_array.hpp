#ifndef OEREO_FIB_ARRAY_HPP
#define OEREO_FIB_ARRAY_HPP

#include <vector>

#include "oereo/bigint.hpp"

namespace oereo {

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
Int binomial(int n, int k);

/// Entry f(n,k) of the Fibonacci right-triangular array: f(n,k) = C(n-k, k).
/// Returns 0 for k < 0 or k > n/2. Throws std::domain_error for n < 0.
Int fib_entry(int n, int k);

/// Row n of the array: (f(n,0), ..., f(n, n/2)).
std::vector<Int> fib_row(int n);

/// Fibonacci number under the convention f(0) = f(1) = 1, f(2) = 2.
/// Note this is offset by one from the common F(1) = F(2) = 1 indexing.
Int fib_number(int n);

/// Riordan's count t(n,m) = C((n+m)/2, m) of alternating parity subsets
/// (no length-parity condition). Requires n >= 1 and 0 <= m <= n.
Int terquem_classic_count(int n, int m);

}  // namespace oereo

#endif
