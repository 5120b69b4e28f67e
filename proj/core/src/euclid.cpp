#include "oereo/euclid.hpp"

#include "oereo/fib_array.hpp"

namespace oereo {

namespace {

Int sign_pow(int e) { return (((e % 2) + 2) % 2 == 0) ? 1 : -1; }

std::span<const Int> prefix(const std::vector<Int>& q, int len) {
  return std::span<const Int>(q.data(), static_cast<size_t>(len));
}

std::span<const Int> suffix(const std::vector<Int>& q, int len) {
  return std::span<const Int>(q.data() + (q.size() - len), static_cast<size_t>(len));
}

}  // namespace

EATrace run_ea(const Int& a, const Int& b) {
  if (b < 1 || a < b) throw std::domain_error("run_ea: require a >= b >= 1");
  EATrace trace;
  trace.a = a;
  trace.b = b;
  trace.remainders = {a, b};
  for (;;) {
    const Int& hi = trace.remainders[trace.remainders.size() - 2];
    const Int& lo = trace.remainders.back();
    Int q = hi / lo;
    Int r = hi % lo;
    trace.quotients.push_back(std::move(q));
    trace.remainders.push_back(std::move(r));
    if (trace.remainders.back() == 0) break;
  }
  trace.num_steps = static_cast<int>(trace.quotients.size());
  trace.gcd = trace.remainders[trace.remainders.size() - 2];
  return trace;
}

BezoutResult bezout(const Int& a, const Int& b) {
  EATrace trace = run_ea(a, b);
  const int n = trace.num_steps;
  auto head = prefix(trace.quotients, n - 1);
  BezoutResult result;
  result.s = sign_pow(n) * eval_recurrence(PolyKind::G, head);
  result.t = sign_pow(n - 1) * eval_recurrence(PolyKind::H, head);
  result.gcd = trace.gcd;
  return result;
}

BezoutResult bezout_backtrack(const Int& a, const Int& b) {
  EATrace trace = run_ea(a, b);
  // invariant: gcd = x*r_{j-1} + y*r_j; start at j = n-1 and substitute
  // r_j = r_{j-2} - q_j r_{j-1} down to j = 0
  Int x = 0, y = 1;
  for (int j = trace.num_steps - 1; j >= 1; --j) {
    Int y_next = x - y * trace.quotients[j - 1];
    x = std::move(y);
    y = std::move(y_next);
  }
  return BezoutResult{std::move(x), std::move(y), trace.gcd};
}

Int remainder_forward(const EATrace& trace, int i) {
  const int n = trace.num_steps;
  if (i < -1 || i > n) throw std::domain_error("remainder_forward: index out of range");
  Int g = (i == -1) ? 1 : eval_recurrence(PolyKind::G, prefix(trace.quotients, i));
  Int h = (i == -1) ? 0 : eval_recurrence(PolyKind::H, prefix(trace.quotients, i));
  return sign_pow(i + 1) * g * trace.a + sign_pow(i) * h * trace.b;
}

Int remainder_backward(const EATrace& trace, int i) {
  const int n = trace.num_steps;
  if (i < -1 || i > n) throw std::domain_error("remainder_backward: index out of range");
  Int g = (i == -1) ? 1 : eval_recurrence(PolyKind::G, suffix(trace.quotients, i));
  return g * trace.gcd;
}

std::pair<Int, Int> cofactors(const EATrace& trace) {
  std::span<const Int> q(trace.quotients);
  return {eval_recurrence(PolyKind::H, q), eval_recurrence(PolyKind::G, q)};
}

std::pair<Int, Int> construct_input(const std::vector<Int>& quotients, const Int& d) {
  if (quotients.empty()) throw std::domain_error("construct_input: quotient list must be nonempty");
  if (d < 1) throw std::domain_error("construct_input: gcd must be >= 1");
  for (const Int& q : quotients)
    if (q < 1) throw std::domain_error("construct_input: quotients must be >= 1");
  if (quotients.size() >= 2 && quotients.back() < 2)
    throw std::domain_error(
        "construct_input: non-canonical quotient list (a trailing quotient of 1 collapses "
        "into the previous step; require last quotient >= 2 when there are >= 2 steps)");
  std::span<const Int> q(quotients);
  return {eval_recurrence(PolyKind::H, q) * d, eval_recurrence(PolyKind::G, q) * d};
}

std::pair<Int, Int> worst_case_pair(int n) {
  if (n < 1) throw std::domain_error("worst_case_pair: require n >= 1");
  if (n == 1) return {1, 1};  // one step, minimal sum
  std::vector<Int> q(static_cast<size_t>(n), 1);
  q.back() = 2;
  // equals (fib_number(n+1), fib_number(n))
  return construct_input(q, 1);
}

Int mod_inverse(const Int& b, const Int& a) {
  if (a < 2) throw std::domain_error("mod_inverse: require modulus a >= 2");
  if (b < 1 || b >= a) throw std::domain_error("mod_inverse: require 1 <= b < a");
  BezoutResult bz = bezout(a, b);
  if (bz.gcd != 1) throw NotCoprimeError("mod_inverse: arguments are not coprime, no inverse exists");
  Int u = bz.t % a;
  if (u < 0) u += a;
  return u;
}

}  // namespace oereo
