#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lamnum/term.hpp"

namespace lamnum {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::size_t line, std::size_t column, std::string expected);

  /// Byte offset into the input.
  std::size_t offset() const noexcept { return offset_; }
  /// 1-based.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class DuplicateName : public std::runtime_error {
 public:
  explicit DuplicateName(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct Definition {
  std::string name;
  Term body;
};

/// Ordered named definitions. Bodies already have earlier definitions
/// inlined.
class Program {
 public:
  Program() = default;

  /// Throws DuplicateName.
  void define(std::string name, Term body);
  /// Appends every definition of `other`, in order. Throws DuplicateName.
  void extend(const Program& other);

  std::optional<Term> find(std::string_view name) const;
  const std::vector<Definition>& definitions() const noexcept { return defs_; }
  bool empty() const noexcept { return defs_.empty(); }

 private:
  std::vector<Definition> defs_;
};

/// Grammar:
///   term := abs | app
///   abs  := ('\' | 'λ') ident+ '.' term
///   app  := atom+ [abs]
///   atom := ident | '(' term ')' | '<' term ',' term '>'
/// Application associates left and an abstraction body extends as far right
/// as possible. '<M,N>' is the pair \x.(x M N). Identifiers bound by an
/// enclosing abstraction are variables; otherwise identifiers defined in
/// `env` are replaced by their bodies and the rest are free variables.
Term parse_term(std::string_view text, const Program& env = {});

/// A sequence of `name = term ;` definitions. `--` starts a line comment.
/// Bodies may use names from `base`; the result holds only the new
/// definitions. Redefining a name, including one from `base`, throws
/// DuplicateName.
Program parse_program(std::string_view text, const Program& base = {});

/// Prints with '\' and '.', parenthesizing only where needed (abstractions
/// used as arguments are always parenthesized). parse_term(pretty(t)) is
/// alpha-equal to t.
std::string pretty(const Term& t);

}  // namespace lamnum
