#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "lamnum/term.hpp"

namespace lamnum {

/// Nameless form of a Term. Bound variables are binder distances
/// (0 = innermost); free variables keep their names.
///
/// Abstractions remember the binder name they were created from as a hint
/// for printing. The hint takes no part in equality, so operator== is
/// exactly alpha-equivalence of the named terms.
class IndexTerm {
 public:
  enum class Kind : std::uint8_t { Bound, Free, Lam, App };

  static IndexTerm bound(std::uint32_t index);
  static IndexTerm free(std::string name);
  static IndexTerm lam(IndexTerm body, std::string hint = "x");
  static IndexTerm app(IndexTerm function, IndexTerm argument);

  Kind kind() const noexcept;
  bool is_lam() const noexcept { return kind() == Kind::Lam; }
  bool is_app() const noexcept { return kind() == Kind::App; }

  std::uint32_t index() const;
  /// Free variable name, or the binder hint of an abstraction.
  const std::string& name() const;
  const IndexTerm& body() const;
  const IndexTerm& function() const;
  const IndexTerm& argument() const;

  std::size_t size() const noexcept;

  /// Smallest number of enclosing binders that closes every bound index in
  /// this subterm; 0 when it has no loose bound variables.
  std::uint32_t binder_demand() const noexcept;

  /// True if both handles refer to the same node.
  bool same_node(const IndexTerm& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const IndexTerm& lhs, const IndexTerm& rhs);

 private:
  struct Node;
  IndexTerm() = default;
  explicit IndexTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

IndexTerm to_indexed(const Term& t);

/// Names each binder after its hint, priming it where the hint would capture
/// a free variable or an outer binder referenced below it.
Term from_indexed(const IndexTerm& t);

/// Adds `delta` to every bound index >= `cutoff`.
IndexTerm shift(const IndexTerm& t, std::int64_t delta, std::uint32_t cutoff = 0);

/// Body of an abstraction with `value` put in for index 0; other loose
/// indices drop by one.
IndexTerm instantiate(const IndexTerm& body, const IndexTerm& value);

}  // namespace lamnum
