#include "oereo/continuants.hpp"

#include <stdexcept>

namespace oereo {

OereoPolynomial build_poly(PolyKind kind, int n, int max_n) {
  if (n < -1) throw std::domain_error("build_poly: require n >= -1");
  OereoPolynomial poly;
  poly.kind = kind;
  poly.order = n;
  poly.monomials =
      enumerate_sequences(kind == PolyKind::G ? SeqKind::EO : SeqKind::OE, n, std::nullopt, max_n);
  return poly;
}

Int eval_recurrence(PolyKind kind, std::span<const Int> values) {
  // K_{-1}, K_0 seeds; g: (1, 0), h: (0, 1)
  Int prev = (kind == PolyKind::G) ? 1 : 0;
  Int cur = (kind == PolyKind::G) ? 0 : 1;
  for (const Int& c : values) {
    Int next = prev + cur * c;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int eval_expanded(const OereoPolynomial& poly, std::span<const Int> values) {
  if (static_cast<int>(values.size()) < poly.order)
    throw std::domain_error("eval_expanded: not enough values for the polynomial order");
  Int sum = 0;
  for (const IntSeq& mono : poly.monomials) {
    Int term = 1;
    for (int idx : mono) term *= values[idx - 1];
    sum += term;
  }
  return sum;
}

bool shift_identities_check(std::span<const Int> values) {
  if (values.empty()) throw std::domain_error("shift_identities_check: require n >= 1");
  auto tail = values.subspan(1);
  Int h_tail = eval_recurrence(PolyKind::H, tail);
  Int g_tail = eval_recurrence(PolyKind::G, tail);
  Int g_full = eval_recurrence(PolyKind::G, values);
  Int h_full = eval_recurrence(PolyKind::H, values);
  return h_tail == g_full && values[0] * h_tail + g_tail == h_full;
}

std::string to_string(const OereoPolynomial& poly) {
  if (poly.monomials.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < poly.monomials.size(); ++i) {
    if (i) s += " + ";
    const IntSeq& mono = poly.monomials[i];
    if (mono.empty()) {
      s += '1';
    } else {
      for (int idx : mono) s += "x" + std::to_string(idx);
    }
  }
  return s;
}

}  // namespace oereo
