#include "lamnum/index_term.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lamnum {

struct IndexTerm::Node {
  Kind kind;
  std::uint32_t index;
  std::string name;
  IndexTerm left;
  IndexTerm right;
  std::size_t size;
  std::uint32_t demand;
};

IndexTerm IndexTerm::bound(std::uint32_t index) {
  return IndexTerm(std::make_shared<const Node>(Node{Kind::Bound, index, {}, {}, {}, 1, index + 1}));
}

IndexTerm IndexTerm::free(std::string name) {
  return IndexTerm(std::make_shared<const Node>(Node{Kind::Free, 0, std::move(name), {}, {}, 1, 0}));
}

IndexTerm IndexTerm::lam(IndexTerm body, std::string hint) {
  const std::size_t n = 1 + body.size();
  const std::uint32_t demand = body.binder_demand() == 0 ? 0 : body.binder_demand() - 1;
  return IndexTerm(
      std::make_shared<const Node>(Node{Kind::Lam, 0, std::move(hint), std::move(body), {}, n, demand}));
}

IndexTerm IndexTerm::app(IndexTerm function, IndexTerm argument) {
  const std::size_t n = 1 + function.size() + argument.size();
  const std::uint32_t demand = std::max(function.binder_demand(), argument.binder_demand());
  return IndexTerm(
      std::make_shared<const Node>(Node{Kind::App, 0, {}, std::move(function), std::move(argument), n, demand}));
}

IndexTerm::Kind IndexTerm::kind() const noexcept { return node_->kind; }

std::uint32_t IndexTerm::index() const {
  if (node_->kind != Kind::Bound) throw std::logic_error("not a bound variable");
  return node_->index;
}

const std::string& IndexTerm::name() const {
  if (node_->kind != Kind::Free && node_->kind != Kind::Lam) throw std::logic_error("node has no name");
  return node_->name;
}

const IndexTerm& IndexTerm::body() const {
  if (node_->kind != Kind::Lam) throw std::logic_error("not an abstraction");
  return node_->left;
}

const IndexTerm& IndexTerm::function() const {
  if (node_->kind != Kind::App) throw std::logic_error("not an application");
  return node_->left;
}

const IndexTerm& IndexTerm::argument() const {
  if (node_->kind != Kind::App) throw std::logic_error("not an application");
  return node_->right;
}

std::size_t IndexTerm::size() const noexcept { return node_->size; }

std::uint32_t IndexTerm::binder_demand() const noexcept { return node_->demand; }

bool operator==(const IndexTerm& lhs, const IndexTerm& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.kind() != rhs.kind() || lhs.size() != rhs.size() || lhs.binder_demand() != rhs.binder_demand()) {
    return false;
  }
  switch (lhs.kind()) {
    case IndexTerm::Kind::Bound:
      return lhs.index() == rhs.index();
    case IndexTerm::Kind::Free:
      return lhs.name() == rhs.name();
    case IndexTerm::Kind::Lam:
      return lhs.body() == rhs.body();
    case IndexTerm::Kind::App:
      return lhs.function() == rhs.function() && lhs.argument() == rhs.argument();
  }
  return false;
}

namespace {

IndexTerm index_rec(const Term& t, std::vector<const std::string*>& scope) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      for (std::size_t i = scope.size(); i-- > 0;) {
        if (*scope[i] == t.name()) return IndexTerm::bound(static_cast<std::uint32_t>(scope.size() - 1 - i));
      }
      return IndexTerm::free(t.name());
    }
    case Term::Kind::Lam: {
      scope.push_back(&t.name());
      IndexTerm body = index_rec(t.body(), scope);
      scope.pop_back();
      return IndexTerm::lam(std::move(body), t.name());
    }
    case Term::Kind::App:
      return IndexTerm::app(index_rec(t.function(), scope), index_rec(t.argument(), scope));
  }
  throw std::logic_error("unreachable");
}

// Names a binder must not take: free names below it, and names of outer
// binders that are referenced from below it.
void names_to_avoid(const IndexTerm& t, std::uint32_t depth, const std::vector<std::string>& scope,
                    std::set<std::string>& out) {
  switch (t.kind()) {
    case IndexTerm::Kind::Bound:
      if (t.index() > depth) {
        const std::size_t up = t.index() - depth - 1;
        out.insert(scope[scope.size() - 1 - up]);
      }
      break;
    case IndexTerm::Kind::Free:
      out.insert(t.name());
      break;
    case IndexTerm::Kind::Lam:
      names_to_avoid(t.body(), depth + 1, scope, out);
      break;
    case IndexTerm::Kind::App:
      names_to_avoid(t.function(), depth, scope, out);
      names_to_avoid(t.argument(), depth, scope, out);
      break;
  }
}

Term name_rec(const IndexTerm& t, std::vector<std::string>& scope) {
  switch (t.kind()) {
    case IndexTerm::Kind::Bound: {
      if (t.index() >= scope.size()) throw std::logic_error("dangling bound index");
      return Term::var(scope[scope.size() - 1 - t.index()]);
    }
    case IndexTerm::Kind::Free:
      return Term::var(t.name());
    case IndexTerm::Kind::Lam: {
      std::set<std::string> avoid;
      names_to_avoid(t.body(), 0, scope, avoid);
      std::string name = fresh_name(is_identifier(t.name()) ? t.name() : std::string("x"), avoid);
      scope.push_back(name);
      Term body = name_rec(t.body(), scope);
      scope.pop_back();
      return Term::lam(std::move(name), std::move(body));
    }
    case IndexTerm::Kind::App:
      return Term::app(name_rec(t.function(), scope), name_rec(t.argument(), scope));
  }
  throw std::logic_error("unreachable");
}

IndexTerm shift_rec(const IndexTerm& t, std::int64_t delta, std::uint32_t cutoff) {
  if (t.binder_demand() <= cutoff) return t;
  switch (t.kind()) {
    case IndexTerm::Kind::Bound: {
      const std::int64_t moved = static_cast<std::int64_t>(t.index()) + delta;
      if (moved < 0) throw std::logic_error("shift below zero");
      return IndexTerm::bound(static_cast<std::uint32_t>(moved));
    }
    case IndexTerm::Kind::Free:
      return t;
    case IndexTerm::Kind::Lam:
      return IndexTerm::lam(shift_rec(t.body(), delta, cutoff + 1), t.name());
    case IndexTerm::Kind::App:
      return IndexTerm::app(shift_rec(t.function(), delta, cutoff), shift_rec(t.argument(), delta, cutoff));
  }
  throw std::logic_error("unreachable");
}

IndexTerm instantiate_rec(const IndexTerm& t, const IndexTerm& value, std::uint32_t depth) {
  if (t.binder_demand() <= depth) return t;
  switch (t.kind()) {
    case IndexTerm::Kind::Bound:
      if (t.index() == depth) return depth == 0 ? value : shift_rec(value, depth, 0);
      return IndexTerm::bound(t.index() - 1);
    case IndexTerm::Kind::Free:
      return t;
    case IndexTerm::Kind::Lam:
      return IndexTerm::lam(instantiate_rec(t.body(), value, depth + 1), t.name());
    case IndexTerm::Kind::App:
      return IndexTerm::app(instantiate_rec(t.function(), value, depth),
                            instantiate_rec(t.argument(), value, depth));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

IndexTerm to_indexed(const Term& t) {
  std::vector<const std::string*> scope;
  return index_rec(t, scope);
}

Term from_indexed(const IndexTerm& t) {
  std::vector<std::string> scope;
  return name_rec(t, scope);
}

IndexTerm shift(const IndexTerm& t, std::int64_t delta, std::uint32_t cutoff) {
  if (delta == 0) return t;
  return shift_rec(t, delta, cutoff);
}

IndexTerm instantiate(const IndexTerm& body, const IndexTerm& value) { return instantiate_rec(body, value, 0); }

bool alpha_eq(const Term& lhs, const Term& rhs) { return to_indexed(lhs) == to_indexed(rhs); }

}  // namespace lamnum
