#ifndef OEREO_CLI_HPP
#define OEREO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "oereo/continuants.hpp"
#include "oereo/euclid.hpp"
#include "oereo/sequences.hpp"

namespace oereo::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;   // unknown subcommand, malformed integers
inline constexpr int kDomainError = 3;  // library precondition violated
inline constexpr int kOverflow = 4;     // reserved; arithmetic is arbitrary-precision
inline constexpr int kNotCoprime = 5;

/// Runs one subcommand; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// JSON forms of the documented schemas. Integers that fit in 64 bits are
// emitted as JSON numbers, larger ones as decimal strings.
nlohmann::json to_json(const Int& value);
nlohmann::json to_json(const IntSeq& seq);
nlohmann::json to_json(const std::vector<IntSeq>& family);
nlohmann::json to_json(const OereoPolynomial& poly);
nlohmann::json to_json(const EATrace& trace);
nlohmann::json to_json(const BezoutResult& result);

}  // namespace oereo::cli

#endif
