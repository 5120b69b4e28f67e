#include "oereo/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace oereo {

namespace {

int parity(int x) { return ((x % 2) + 2) % 2; }

bool strictly_increasing_positive(const IntSeq& seq) {
  int last = 0;
  for (int v : seq) {
    if (v <= last) return false;
    last = v;
  }
  return true;
}

void check_bound(SeqKind kind, int n) {
  if (kind == SeqKind::OE || kind == SeqKind::EO) {
    if (n < -1) throw std::domain_error("sequences: require n >= -1 for oe/eo kinds");
  } else {
    if (n < 1) throw std::domain_error("sequences: require n >= 1");
  }
}

// Is a (valid-so-far) sequence of this length a member of the family, as
// opposed to merely a prefix of one?
bool length_admissible(SeqKind kind, int n, int len) {
  switch (kind) {
    case SeqKind::OE:
      return parity(len) == parity(n);
    case SeqKind::EO:
      return parity(len) == parity(n + 1);
    default:
      return true;
  }
}

// Depth-first extension; visiting a node before its children yields pure
// lexicographic order.
void extend(SeqKind kind, int n, IntSeq& cur, std::vector<IntSeq>& out) {
  if (length_admissible(kind, n, static_cast<int>(cur.size()))) out.push_back(cur);
  int lo = 0, hi = 0, step = 1;
  switch (kind) {
    case SeqKind::ConsecutiveFree:
      lo = cur.empty() ? 1 : cur.back() + 2;
      hi = n - 1;
      break;
    case SeqKind::OE:
    case SeqKind::EO:
      if (cur.empty()) {
        lo = (kind == SeqKind::OE) ? 1 : 2;
        step = 2;
      } else {
        lo = cur.back() + 1;  // opposite parity; +3, +5, ... also qualify
        step = 2;
      }
      hi = n;
      break;
    case SeqKind::AltParity: {
      // next 1-based position is cur.size()+1; odd positions hold odd entries
      int want = (cur.size() % 2 == 0) ? 1 : 0;
      lo = cur.empty() ? (want == 1 ? 1 : 2) : cur.back() + 1;
      if (parity(lo) != want) ++lo;
      step = 2;
      hi = n;
      break;
    }
  }
  for (int v = lo; v <= hi; v += step) {
    cur.push_back(v);
    extend(kind, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool validate(const IntSeq& seq, SeqKind kind, int n) {
  check_bound(kind, n);
  if (!strictly_increasing_positive(seq)) return false;
  const int len = static_cast<int>(seq.size());
  switch (kind) {
    case SeqKind::ConsecutiveFree:
      if (!seq.empty() && seq.back() >= n) return false;
      for (int i = 1; i < len; ++i)
        if (seq[i] - seq[i - 1] < 2) return false;
      return true;
    case SeqKind::OE:
    case SeqKind::EO: {
      if (!length_admissible(kind, n, len)) return false;
      if (seq.empty()) return true;
      if (seq.back() > n) return false;
      int first_parity = (kind == SeqKind::OE) ? 1 : 0;
      for (int i = 0; i < len; ++i)
        if (parity(seq[i]) != (first_parity + i) % 2) return false;
      return true;
    }
    case SeqKind::AltParity:
      if (!seq.empty() && seq.back() > n) return false;
      for (int i = 0; i < len; ++i)
        if (parity(seq[i]) != (i % 2 == 0 ? 1 : 0)) return false;
      return true;
  }
  return false;
}

std::vector<IntSeq> enumerate_sequences(SeqKind kind, int n,
                                        std::optional<int> length, int max_n) {
  check_bound(kind, n);
  if (n > max_n)
    throw std::domain_error(
        "enumerate_sequences: bound exceeds size guard (raise max_n to override)");
  if (length && *length < 0) throw std::domain_error("enumerate_sequences: length must be >= 0");

  std::vector<IntSeq> out;
  if (n >= 1) {
    IntSeq cur;
    extend(kind, n, cur, out);
  } else {
    // OE(-1) = {}, OE(0) = {()}, EO(-1) = {()}, EO(0) = {}
    bool has_empty = (kind == SeqKind::OE && n == 0) || (kind == SeqKind::EO && n == -1);
    if (has_empty) out.push_back({});
  }

  if (length) {
    std::erase_if(out, [&](const IntSeq& s) { return static_cast<int>(s.size()) != *length; });
  }
  // canonical order: length-major, lexicographic within a length
  std::stable_sort(out.begin(), out.end(), [](const IntSeq& a, const IntSeq& b) {
    return a.size() < b.size();
  });
  return out;
}

std::vector<IntSeq> cf_set(int n, int k, int max_n) {
  if (k < 0) return {};
  return enumerate_sequences(SeqKind::ConsecutiveFree, n, k, max_n);
}

std::vector<IntSeq> oe_set(int n, int k, int max_n) {
  int len = n - 2 * k;
  if (len < 0) return {};
  return enumerate_sequences(SeqKind::OE, n, len, max_n);
}

std::vector<IntSeq> eo_set(int n, int k, int max_n) {
  int len = (n - 1) - 2 * k;
  if (len < 0) return {};
  return enumerate_sequences(SeqKind::EO, n, len, max_n);
}

IntSeq phi(const IntSeq& s, int n, int k) {
  if (static_cast<int>(s.size()) != k || !validate(s, SeqKind::ConsecutiveFree, n))
    throw std::domain_error("phi: input is not in CF(n,k)");
  std::vector<char> removed(n + 2, 0);
  for (int v : s) {
    removed[v] = 1;
    removed[v + 1] = 1;
  }
  IntSeq t;
  t.reserve(n - 2 * k);
  for (int i = 1; i <= n; ++i)
    if (!removed[i]) t.push_back(i);
  return t;
}

IntSeq phi_inverse(const IntSeq& t, int n) {
  if (!validate(t, SeqKind::OE, n))
    throw std::domain_error("phi_inverse: input is not an oe-sequence bounded by n");
  std::vector<char> in_t(n + 2, 0);
  for (int v : t) in_t[v] = 1;
  IntSeq s;
  int i = 1;
  while (i <= n) {
    if (in_t[i]) {
      ++i;
      continue;
    }
    int run_start = i;
    while (i <= n && !in_t[i]) ++i;
    // each complement run has even length; take its 1st, 3rd, 5th, ...
    for (int j = run_start; j < i; j += 2) s.push_back(j);
  }
  return s;
}

IntSeq psi(const IntSeq& t) {
  if (t.empty()) return {};
  if (!strictly_increasing_positive(t) || t.front() < 2 || t.front() % 2 != 0)
    throw std::domain_error("psi: input must be an eo-sequence (first entry even, >= 2)");
  for (size_t i = 1; i < t.size(); ++i)
    if (parity(t[i]) == parity(t[i - 1]))
      throw std::domain_error("psi: entries must alternate parity");
  IntSeq out;
  out.reserve(t.size());
  for (int v : t) out.push_back(v - 1);
  return out;
}

std::string to_string(const IntSeq& seq) {
  std::string s = "(";
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(seq[i]);
  }
  s += ')';
  return s;
}

}  // namespace oereo
