#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oereo/fib_array.hpp"

namespace oereo::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_big(const std::string& s) {
  size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start) throw UsageError("malformed integer: '" + s + "'");
  for (size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw UsageError("malformed integer: '" + s + "'");
  return Int(s);
}

int parse_small(const std::string& s) {
  Int v = parse_big(s);
  if (v < INT32_MIN || v > INT32_MAX) throw UsageError("integer out of range: '" + s + "'");
  return v.convert_to<int>();
}

// comma-separated list; "-" (or empty) is the empty list
std::vector<std::string> split_list(const std::string& s) {
  if (s.empty() || s == "-") return {};
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!s.empty() && s.back() == ',') throw UsageError("malformed list: '" + s + "'");
  return parts;
}

IntSeq parse_seq(const std::string& s) {
  IntSeq seq;
  for (const auto& p : split_list(s)) seq.push_back(parse_small(p));
  return seq;
}

std::vector<Int> parse_big_list(const std::string& s) {
  std::vector<Int> values;
  for (const auto& p : split_list(s)) values.push_back(parse_big(p));
  return values;
}

SeqKind parse_seq_kind(const std::string& s) {
  if (s == "cf" || s == "consecutive-free") return SeqKind::ConsecutiveFree;
  if (s == "oe") return SeqKind::OE;
  if (s == "eo") return SeqKind::EO;
  if (s == "alt" || s == "alt-parity") return SeqKind::AltParity;
  throw UsageError("unknown sequence kind '" + s + "' (expected cf, oe, eo, or alt)");
}

PolyKind parse_poly_kind(const std::string& s) {
  if (s == "g") return PolyKind::G;
  if (s == "h") return PolyKind::H;
  throw UsageError("unknown polynomial kind '" + s + "' (expected g or h)");
}

std::string plain(const Int& v) { return v.str(); }

void print_row(std::ostream& out, const std::vector<Int>& row) {
  for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
  out << "\n";
}

void print_ea_tableau(std::ostream& out, const EATrace& trace) {
  const int n = trace.num_steps;
  std::vector<std::string> eqs;
  for (int i = 1; i <= n; ++i) {
    // r_{i-2} = r_{i-1} * q_i + r_i; remainders[j+1] holds r_j
    std::ostringstream eq;
    eq << trace.remainders[i - 1] << " = " << trace.remainders[i] << " * "
       << trace.quotients[i - 1] << " + " << trace.remainders[i + 1];
    eqs.push_back(eq.str());
  }
  // two columns in the paper's reading order: left column first
  const int rows = (n + 1) / 2;
  size_t left_width = 0;
  for (int r = 0; r < rows; ++r) left_width = std::max(left_width, eqs[r].size());
  for (int r = 0; r < rows; ++r) {
    std::string line = eqs[r];
    if (rows + r < n) {
      line.resize(left_width, ' ');
      line += "    " + eqs[rows + r];
    }
    out << line << "\n";
  }
  out << "gcd=" << trace.gcd << " steps=" << n << "\n";
}

}  // namespace

json to_json(const Int& value) {
  static const Int kMin = std::numeric_limits<int64_t>::min();
  static const Int kMax = std::numeric_limits<int64_t>::max();
  if (value >= kMin && value <= kMax) return value.convert_to<int64_t>();
  return value.str();
}

json to_json(const IntSeq& seq) { return json(seq); }

json to_json(const std::vector<IntSeq>& family) {
  json arr = json::array();
  for (const auto& s : family) arr.push_back(to_json(s));
  return arr;
}

json to_json(const OereoPolynomial& poly) {
  return json{{"kind", poly.kind == PolyKind::G ? "g" : "h"},
              {"n", poly.order},
              {"monomials", to_json(poly.monomials)}};
}

json to_json(const EATrace& trace) {
  json rem = json::array();
  for (const auto& r : trace.remainders) rem.push_back(to_json(r));
  json quo = json::array();
  for (const auto& q : trace.quotients) quo.push_back(to_json(q));
  return json{{"a", to_json(trace.a)},     {"b", to_json(trace.b)},
              {"gcd", to_json(trace.gcd)}, {"num_steps", trace.num_steps},
              {"rem_list", rem},           {"quo_list", quo}};
}

json to_json(const BezoutResult& result) {
  return json{{"s", to_json(result.s)}, {"t", to_json(result.t)}, {"gcd", to_json(result.gcd)}};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci array, oereo sequences, continuant polynomials, and a traced Euclidean Algorithm"};
  app.require_subcommand(1);

  struct {
    std::string x, y, seq, kind;
    std::string format = "table";
    std::string gcd = "1";
    int max_n = kDefaultMaxN;
    std::optional<int> length, k;
    bool backward = false;
  } opt;

  bool json_out = false;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
  };

  std::function<void()> action;

  auto* fib_entry_cmd = app.add_subcommand("fib-entry", "entry f(n,k) of the Fibonacci array");
  fib_entry_cmd->add_option("n", opt.x)->required();
  fib_entry_cmd->add_option("k", opt.y)->required();
  add_format(fib_entry_cmd);
  fib_entry_cmd->callback([&] {
    action = [&] {
      Int v = fib_entry(parse_small(opt.x), parse_small(opt.y));
      if (json_out) out << json{{"value", to_json(v)}}.dump() << "\n";
      else out << plain(v) << "\n";
    };
  });

  auto* fib_row_cmd = app.add_subcommand("fib-row", "row n of the Fibonacci array");
  fib_row_cmd->add_option("n", opt.x)->required();
  add_format(fib_row_cmd);
  fib_row_cmd->callback([&] {
    action = [&] {
      auto row = fib_row(parse_small(opt.x));
      if (json_out) {
        json arr = json::array();
        for (const auto& v : row) arr.push_back(to_json(v));
        out << arr.dump() << "\n";
      } else {
        print_row(out, row);
      }
    };
  });

  auto* fib_number_cmd =
      app.add_subcommand("fib-number", "Fibonacci number, convention f(0) = f(1) = 1");
  fib_number_cmd->add_option("n", opt.x)->required();
  add_format(fib_number_cmd);
  fib_number_cmd->callback([&] {
    action = [&] {
      Int v = fib_number(parse_small(opt.x));
      if (json_out) out << json{{"value", to_json(v)}}.dump() << "\n";
      else out << plain(v) << "\n";
    };
  });

  auto* terquem_cmd =
      app.add_subcommand("terquem-classic", "Riordan's alternating-parity count t(n,m)");
  terquem_cmd->add_option("n", opt.x)->required();
  terquem_cmd->add_option("m", opt.y)->required();
  add_format(terquem_cmd);
  terquem_cmd->callback([&] {
    action = [&] {
      Int v = terquem_classic_count(parse_small(opt.x), parse_small(opt.y));
      if (json_out) out << json{{"value", to_json(v)}}.dump() << "\n";
      else out << plain(v) << "\n";
    };
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "list sequences of a kind bounded by n");
  enum_cmd->add_option("kind", opt.kind, "cf, oe, eo, or alt")->required();
  enum_cmd->add_option("n", opt.x)->required();
  auto* len_opt = enum_cmd->add_option("--length", opt.length, "keep only this length");
  enum_cmd->add_option("--k", opt.k, "k-index per the family's length convention")
      ->excludes(len_opt);
  enum_cmd->add_option("--max-n", opt.max_n, "override the enumeration size guard");
  add_format(enum_cmd);
  enum_cmd->callback([&] {
    action = [&] {
      SeqKind kind = parse_seq_kind(opt.kind);
      int n = parse_small(opt.x);
      std::optional<int> length = opt.length;
      if (opt.k) {
        switch (kind) {
          case SeqKind::OE: length = n - 2 * *opt.k; break;
          case SeqKind::EO: length = (n - 1) - 2 * *opt.k; break;
          default: length = *opt.k; break;
        }
        if (*length < 0) length = -1;  // empty family, not an error
      }
      std::vector<IntSeq> seqs;
      if (!length || *length >= 0) seqs = enumerate_sequences(kind, n, length, opt.max_n);
      if (json_out) {
        out << to_json(seqs).dump() << "\n";
      } else {
        for (const auto& s : seqs) out << oereo::to_string(s) << "\n";
      }
    };
  });

  auto* phi_cmd = app.add_subcommand("phi", "bijection CF(n,k) -> OE(n,k)");
  phi_cmd->add_option("seq", opt.seq, "comma-separated entries, '-' for the empty sequence")
      ->required();
  phi_cmd->add_option("n", opt.x)->required();
  add_format(phi_cmd);
  phi_cmd->callback([&] {
    action = [&] {
      IntSeq s = parse_seq(opt.seq);
      IntSeq t = phi(s, parse_small(opt.x), static_cast<int>(s.size()));
      if (json_out) out << to_json(t).dump() << "\n";
      else out << oereo::to_string(t) << "\n";
    };
  });

  auto* phi_inv_cmd = app.add_subcommand("phi-inverse", "inverse bijection OE(n,k) -> CF(n,k)");
  phi_inv_cmd->add_option("seq", opt.seq)->required();
  phi_inv_cmd->add_option("n", opt.x)->required();
  add_format(phi_inv_cmd);
  phi_inv_cmd->callback([&] {
    action = [&] {
      IntSeq s = phi_inverse(parse_seq(opt.seq), parse_small(opt.x));
      if (json_out) out << to_json(s).dump() << "\n";
      else out << oereo::to_string(s) << "\n";
    };
  });

  auto* psi_cmd = app.add_subcommand("psi", "bijection EO(n,k) -> OE(n-1,k) (decrement entries)");
  psi_cmd->add_option("seq", opt.seq)->required();
  add_format(psi_cmd);
  psi_cmd->callback([&] {
    action = [&] {
      IntSeq s = psi(parse_seq(opt.seq));
      if (json_out) out << to_json(s).dump() << "\n";
      else out << oereo::to_string(s) << "\n";
    };
  });

  auto* poly_cmd = app.add_subcommand("poly", "continuant polynomial g_n or h_n");
  poly_cmd->add_option("kind", opt.kind, "g or h")->required();
  poly_cmd->add_option("n", opt.x)->required();
  poly_cmd->add_option("--max-n", opt.max_n, "override the enumeration size guard");
  add_format(poly_cmd);
  poly_cmd->callback([&] {
    action = [&] {
      auto poly = build_poly(parse_poly_kind(opt.kind), parse_small(opt.x), opt.max_n);
      if (json_out) out << to_json(poly).dump() << "\n";
      else out << oereo::to_string(poly) << "\n";
    };
  });

  auto* eval_cmd = app.add_subcommand("eval", "evaluate g_n or h_n at integer arguments");
  eval_cmd->add_option("kind", opt.kind, "g or h")->required();
  eval_cmd->add_option("values", opt.seq, "comma-separated, '-' for none")->required();
  add_format(eval_cmd);
  eval_cmd->callback([&] {
    action = [&] {
      auto values = parse_big_list(opt.seq);
      Int v = eval_recurrence(parse_poly_kind(opt.kind), values);
      if (json_out) out << json{{"value", to_json(v)}}.dump() << "\n";
      else out << plain(v) << "\n";
    };
  });

  // ea and bezout normalize argument order (the library itself never swaps)
  auto normalized = [&]() -> std::pair<Int, Int> {
    Int a = parse_big(opt.x), b = parse_big(opt.y);
    if (a < 1 || b < 1) throw std::domain_error("inputs must be positive integers");
    if (b > a) {
      std::swap(a, b);
      err << "note: swapped arguments so that a >= b\n";
    }
    return {a, b};
  };

  auto* ea_cmd = app.add_subcommand("ea", "run the Euclidean Algorithm and show the trace");
  ea_cmd->add_option("a", opt.x)->required();
  ea_cmd->add_option("b", opt.y)->required();
  add_format(ea_cmd);
  ea_cmd->callback([&] {
    action = [&] {
      auto [a, b] = normalized();
      EATrace trace = run_ea(a, b);
      if (json_out) out << to_json(trace).dump() << "\n";
      else print_ea_tableau(out, trace);
    };
  });

  auto* bezout_cmd = app.add_subcommand("bezout", "continuant Bezout coefficients");
  bezout_cmd->add_option("a", opt.x)->required();
  bezout_cmd->add_option("b", opt.y)->required();
  add_format(bezout_cmd);
  bezout_cmd->callback([&] {
    action = [&] {
      auto [a, b] = normalized();
      BezoutResult r = bezout(a, b);
      if (json_out) out << to_json(r).dump() << "\n";
      else out << "s=" << r.s << " t=" << r.t << " gcd=" << r.gcd << "\n";
    };
  });

  auto* rem_cmd =
      app.add_subcommand("remainders", "reconstruct the remainder list from the quotients");
  rem_cmd->add_option("a", opt.x)->required();
  rem_cmd->add_option("b", opt.y)->required();
  auto* fwd_flag = rem_cmd->add_flag("--forward", "Bezout-type reconstruction (default)");
  rem_cmd->add_flag("--backward", opt.backward, "gcd-multiple reconstruction")->excludes(fwd_flag);
  add_format(rem_cmd);
  rem_cmd->callback([&] {
    action = [&] {
      Int a = parse_big(opt.x), b = parse_big(opt.y);
      EATrace trace = run_ea(a, b);
      const int n = trace.num_steps;
      std::vector<std::pair<int, Int>> rec;  // (remainder index, value)
      if (opt.backward) {
        for (int idx = 0; idx <= n; ++idx) rec.emplace_back(idx, remainder_backward(trace, n - idx));
      } else {
        for (int idx = -1; idx <= n; ++idx) rec.emplace_back(idx, remainder_forward(trace, idx));
      }
      if (json_out) {
        json arr = json::array();
        for (const auto& [idx, v] : rec) arr.push_back(to_json(v));
        out << json{{"a", to_json(a)},
                    {"b", to_json(b)},
                    {"direction", opt.backward ? "backward" : "forward"},
                    {"first_index", rec.front().first},
                    {"rem_list", arr}}
                   .dump()
            << "\n";
      } else {
        for (const auto& [idx, v] : rec) out << "r[" << idx << "] = " << v << "\n";
      }
    };
  });

  auto* cof_cmd = app.add_subcommand("cofactors", "the coprime pair (a/gcd, b/gcd)");
  cof_cmd->add_option("a", opt.x)->required();
  cof_cmd->add_option("b", opt.y)->required();
  add_format(cof_cmd);
  cof_cmd->callback([&] {
    action = [&] {
      EATrace trace = run_ea(parse_big(opt.x), parse_big(opt.y));
      auto [ag, bg] = cofactors(trace);
      if (json_out)
        out << json{{"a_over_gcd", to_json(ag)}, {"b_over_gcd", to_json(bg)}}.dump() << "\n";
      else out << "a/gcd=" << ag << " b/gcd=" << bg << "\n";
    };
  });

  auto* construct_cmd =
      app.add_subcommand("construct", "build (a,b) with a prescribed quotient list and gcd");
  construct_cmd->add_option("quotients", opt.seq, "comma-separated canonical quotient list")
      ->required();
  construct_cmd->add_option("--gcd", opt.gcd, "desired gcd (default 1)");
  add_format(construct_cmd);
  construct_cmd->callback([&] {
    action = [&] {
      auto [a, b] = construct_input(parse_big_list(opt.seq), parse_big(opt.gcd));
      if (json_out) out << json{{"a", to_json(a)}, {"b", to_json(b)}}.dump() << "\n";
      else out << "a=" << a << " b=" << b << "\n";
    };
  });

  auto* worst_cmd =
      app.add_subcommand("worst-case", "smallest pair taking exactly n division steps");
  worst_cmd->add_option("n", opt.x)->required();
  add_format(worst_cmd);
  worst_cmd->callback([&] {
    action = [&] {
      auto [a, b] = worst_case_pair(parse_small(opt.x));
      if (json_out) out << json{{"a", to_json(a)}, {"b", to_json(b)}}.dump() << "\n";
      else out << "a=" << a << " b=" << b << "\n";
    };
  });

  auto* inv_cmd = app.add_subcommand("inverse", "multiplicative inverse of b modulo a");
  inv_cmd->add_option("b", opt.x)->required();
  inv_cmd->add_option("a", opt.y)->required();
  add_format(inv_cmd);
  inv_cmd->callback([&] {
    action = [&] {
      Int v = mod_inverse(parse_big(opt.x), parse_big(opt.y));
      if (json_out) out << json{{"value", to_json(v)}}.dump() << "\n";
      else out << plain(v) << "\n";
    };
  });

  std::vector<std::string> argv_storage = args;
  std::vector<const char*> argv;
  argv.push_back("oereo");
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  json_out = (opt.format == "json");
  try {
    action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const NotCoprimeError& e) {
    err << "error: " << e.what() << "\n";
    return kNotCoprime;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kOverflow;
  }
  return kOk;
}

}  // namespace oereo::cli
