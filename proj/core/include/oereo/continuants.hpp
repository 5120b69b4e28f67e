#ifndef OEREO_CONTINUANTS_HPP
#define OEREO_CONTINUANTS_HPP

#include <span>
#include <string>
#include <vector>

#include "oereo/bigint.hpp"
#include "oereo/sequences.hpp"

namespace oereo {

// The two continuant families: h_n sums x_T over OE(n) and satisfies
// h_{-1} = 0, h_0 = 1, h_{n+1} = h_{n-1} + h_n x_{n+1}; g_n sums x_T over
// EO(n) with g_{-1} = 1, g_0 = 0 and the same three-term recurrence.
enum class PolyKind { G, H };

struct OereoPolynomial {
  PolyKind kind;
  int order;                       // n >= -1
  std::vector<IntSeq> monomials;   // degree ascending, then lexicographic;
                                   // {} encodes the constant term 1
};

/// Symbolic g_n or h_n; its monomial set is exactly EO(n) resp. OE(n).
OereoPolynomial build_poly(PolyKind kind, int n, int max_n = kDefaultMaxN);

/// g_n or h_n at (values[0], ..., values[n-1]) by the three-term recurrence;
/// O(n) multiplications. Zero and negative arguments are fine.
Int eval_recurrence(PolyKind kind, std::span<const Int> values);

/// Same value by expanding the monomial sum (exponential; the testing
/// oracle for eval_recurrence). Requires values.size() >= poly order.
Int eval_expanded(const OereoPolynomial& poly, std::span<const Int> values);

/// Checks h_{n-1}(c2..cn) = g_n(c1..cn) and
/// c1*h_{n-1}(c2..cn) + g_{n-1}(c2..cn) = h_n(c1..cn); always true.
bool shift_identities_check(std::span<const Int> values);

/// "1 + x1x2 + ..." in monomial order; the zero polynomial prints "0".
std::string to_string(const OereoPolynomial& poly);

}  // namespace oereo

#endif
