#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lamnum {

/// An untyped lambda term with named variables.
///
/// Terms are immutable values. Copies share structure, so passing a Term by
/// value is cheap and safe across threads.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App };

  /// Throws std::invalid_argument if `name` is not a valid identifier.
  static Term var(std::string name);
  static Term lam(std::string binder, Term body);
  static Term app(Term function, Term argument);

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_lam() const noexcept { return kind() == Kind::Lam; }
  bool is_app() const noexcept { return kind() == Kind::App; }

  /// Variable name for Var, binder name for Lam.
  const std::string& name() const;
  const Term& body() const;
  const Term& function() const;
  const Term& argument() const;

  /// Node count.
  std::size_t size() const noexcept;

  /// Structural equality, binder names included. Use alpha_eq for
  /// equality up to renaming.
  friend bool operator==(const Term& lhs, const Term& rhs);

 private:
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Left-nested application: apply(f, {a, b}) is ((f a) b).
Term apply(Term function, std::initializer_list<Term> arguments);
Term apply(Term function, const std::vector<Term>& arguments);

/// Nested abstractions: abstract({"x", "y"}, M) is \x.\y.M.
Term abstract(std::initializer_list<std::string> binders, Term body);

/// [A-Za-z_][A-Za-z0-9_']*
bool is_identifier(std::string_view text) noexcept;

std::set<std::string> free_vars(const Term& t);
bool is_closed(const Term& t);
inline std::size_t size(const Term& t) noexcept { return t.size(); }

/// Appends primes to `base` until the result is not in `avoid`.
std::string fresh_name(std::string base, const std::set<std::string>& avoid);

/// Simultaneous substitution of free variables.
using Substitution = std::map<std::string, Term>;

/// Capture-avoiding simultaneous substitution. Binders that would capture a
/// free variable of an inserted term are renamed with fresh_name.
Term substitute(const Term& t, const Substitution& s);

bool alpha_eq(const Term& lhs, const Term& rhs);

// Basic combinators.
Term mk_I();
Term mk_T();
Term mk_F();

/// \x.(x m n), with x primed until it is free in neither component.
Term mk_pair(const Term& m, const Term& n);

/// <...<<I,U1>,U2>,...,Un>; the empty tuple is I.
Term mk_tuple(const std::vector<Term>& us);

}  // namespace lamnum
