#include "sanecol/cnf.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <optional>
#include <sstream>

#include "sanecol/errors.hpp"

namespace sanecol {

void CnfFormula::validate() const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].empty()) {
      throw ArgumentError("clause " + std::to_string(i) + " is empty");
    }
    for (const Literal lit : clauses[i]) {
      if (lit == 0 || static_cast<std::uint64_t>(std::llabs(lit)) > var_count) {
        throw ArgumentError("literal " + std::to_string(lit) + " out of range for " +
                            std::to_string(var_count) + " variables");
      }
    }
  }
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (const Literal lit : clause) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::string emit_dimacs_cnf(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.var_count) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const auto& clause : f.clauses) {
    for (const Literal lit : clause) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

CnfFormula parse_dimacs_cnf(std::istream& in) {
  CnfFormula f;
  std::optional<std::size_t> declared;
  Clause current;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok) || tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      if (declared) throw ParseError(line_no, "duplicate problem line");
      std::string kind;
      long long vars = -1;
      long long count = -1;
      std::string extra;
      if (!(fields >> kind >> vars >> count) || kind != "cnf" || vars < 0 || count < 0 ||
          vars > 0x7fffffff || (fields >> extra)) {
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      }
      f.var_count = static_cast<std::uint32_t>(vars);
      declared = static_cast<std::size_t>(count);
      continue;
    }
    if (!declared) throw ParseError(line_no, "clause before problem line");

    do {
      Literal lit = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "malformed literal '" + tok + "'");
      }
      if (lit == 0) {
        if (current.empty()) throw ParseError(line_no, "empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::uint32_t>(std::abs(static_cast<long long>(lit))) > f.var_count) {
          throw ParseError(line_no, "literal " + tok + " exceeds declared variable count");
        }
        current.push_back(lit);
      }
    } while (fields >> tok);
  }

  if (!declared) throw ParseError(line_no, "missing problem line");
  if (!current.empty()) throw ParseError(line_no, "final clause not terminated by 0");
  if (f.clauses.size() != *declared) {
    throw ParseError(line_no, "header declares " + std::to_string(*declared) + " clauses, found " +
                                  std::to_string(f.clauses.size()));
  }
  return f;
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_cnf(in);
}

}  // namespace sanecol
