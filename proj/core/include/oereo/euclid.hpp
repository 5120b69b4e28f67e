#ifndef OEREO_EUCLID_HPP
#define OEREO_EUCLID_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "oereo/bigint.hpp"
#include "oereo/continuants.hpp"

namespace oereo {

/// Requested inverse does not exist: gcd(a, b) > 1.
class NotCoprimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Full record of one Euclidean Algorithm run on a >= b >= 1:
//   remainders = (r_{-1}, r_0, ..., r_n) with r_{-1} = a, r_0 = b, r_n = 0,
//   r_{i-2} = r_{i-1} q_i + r_i, 0 <= r_i < r_{i-1};
//   quotients  = (q_1, ..., q_n), q_i >= 1 and q_n >= 2 when n >= 2;
//   gcd = r_{n-1}, num_steps = n.
// remainders[i + 1] holds r_i.
struct EATrace {
  Int a;
  Int b;
  Int gcd;
  int num_steps = 0;
  std::vector<Int> remainders;
  std::vector<Int> quotients;
};

struct BezoutResult {
  Int s;
  Int t;
  Int gcd;  // a*s + b*t == gcd
};

/// Runs the Euclidean Algorithm. Requires a >= b >= 1 (callers normalize;
/// the library does not swap).
EATrace run_ea(const Int& a, const Int& b);

/// The canonical continuant Bezout pair:
/// s = (-1)^n g_{n-1}(q_1..q_{n-1}), t = (-1)^{n-1} h_{n-1}(q_1..q_{n-1}).
BezoutResult bezout(const Int& a, const Int& b);

/// The same pair by classical back-substitution through the trace;
/// independent oracle for bezout, with which it agrees exactly.
BezoutResult bezout_backtrack(const Int& a, const Int& b);

/// r_i reconstructed as (-1)^{i+1} g_i(q_1..q_i) a + (-1)^i h_i(q_1..q_i) b,
/// for -1 <= i <= num_steps.
Int remainder_forward(const EATrace& trace, int i);

/// r_{n-i} reconstructed as g_i(q_{n+1-i}..q_n) * gcd, for -1 <= i <= n.
/// i = -1 yields the virtual r_{n+1} := gcd and is not present in the
/// remainder list.
Int remainder_backward(const EATrace& trace, int i);

/// (a/gcd, b/gcd) = (h_n(q_1..q_n), g_n(q_1..q_n)); always coprime.
std::pair<Int, Int> cofactors(const EATrace& trace);

/// Builds (a, b) = (h_n(q) d, g_n(q) d) from a canonical quotient sequence
/// (all q_i >= 1, last >= 2 when length >= 2) and gcd d >= 1; run_ea on the
/// result reproduces exactly these quotients and gcd. Non-canonical lists
/// are rejected.
std::pair<Int, Int> construct_input(const std::vector<Int>& quotients, const Int& d);

/// The pair minimizing a + b (ties by smaller a) among pairs a >= b >= 1 on
/// which the algorithm takes exactly n steps. (1, 1) for n = 1; the
/// consecutive Fibonacci pair (fib_number(n+1), fib_number(n)) for n >= 2,
/// built from the all-ones quotient list ending in 2.
std::pair<Int, Int> worst_case_pair(int n);

/// The unique u in [1, a-1] with b u == 1 (mod a). Requires a >= 2 and
/// 1 <= b < a; throws NotCoprimeError when gcd(a, b) > 1.
Int mod_inverse(const Int& b, const Int& a);

}  // namespace oereo

#endif
