#ifndef OEREO_SEQUENCES_HPP
#define OEREO_SEQUENCES_HPP

#include <optional>
#include <string>
#include <vector>

#include "oereo/bigint.hpp"

namespace oereo {

// A strictly increasing sequence of positive integers; {} is the empty
// sequence, a first-class value throughout.
using IntSeq = std::vector<int>;

enum class SeqKind {
  ConsecutiveFree,  // last entry < n, gaps >= 2
  OE,               // first odd, alternating parity, last <= n, length == n (mod 2)
  EO,               // first even, alternating parity, last <= n, length == n+1 (mod 2)
  AltParity,        // odd positions odd, even positions even, entries <= n
};

// Enumeration refuses bounds above this by default (output is
// Fibonacci-sized in n); pass a larger max_n to override.
inline constexpr int kDefaultMaxN = 40;

/// True iff seq satisfies the invariants of the given kind for bound n.
/// Bounds: n >= -1 for OE/EO (OE(-1) = {}, OE(0) = {()}, EO(-1) = {()},
/// EO(0) = {}), n >= 1 otherwise.
bool validate(const IntSeq& seq, SeqKind kind, int n);

/// All sequences of the given kind bounded by n, optionally restricted to
/// one length, in canonical order: length ascending, then lexicographic.
std::vector<IntSeq> enumerate_sequences(SeqKind kind, int n,
                                        std::optional<int> length = std::nullopt,
                                        int max_n = kDefaultMaxN);

// k-indexed accessors. OE(n,k) holds length n-2k, EO(n,k) length (n-1)-2k,
// CF(n,k) length k; a negative target length yields the empty family.
std::vector<IntSeq> cf_set(int n, int k, int max_n = kDefaultMaxN);
std::vector<IntSeq> oe_set(int n, int k, int max_n = kDefaultMaxN);
std::vector<IntSeq> eo_set(int n, int k, int max_n = kDefaultMaxN);

/// The bijection CF(n,k) -> OE(n,k): remove the pairs {s, s+1} for each
/// entry s of S from {1,...,n} and keep the rest.
IntSeq phi(const IntSeq& s, int n, int k);

/// Inverse of phi: the complement of T in {1,...,n} splits into even-length
/// runs of consecutive integers; collect the 1st, 3rd, 5th, ... of each run.
IntSeq phi_inverse(const IntSeq& t, int n);

/// The bijection EO(n,k) -> OE(n-1,k): () -> (), otherwise decrement every
/// entry by 1.
IntSeq psi(const IntSeq& t);

/// "(1,4,5)" / "()" rendering; the compact digit-concatenated form of the
/// literature is ambiguous for entries >= 10 and is never used.
std::string to_string(const IntSeq& seq);

}  // namespace oereo

#endif
