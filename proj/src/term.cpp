#include "lamnum/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lamnum {

struct Term::Node {
  Kind kind;
  std::string name;
  Term left;
  Term right;
  std::size_t size;
};

Term Term::var(std::string name) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid identifier '" + name + "'");
  }
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), Term(), Term(), 1}));
}

Term Term::lam(std::string binder, Term body) {
  if (!is_identifier(binder)) {
    throw std::invalid_argument("invalid binder '" + binder + "'");
  }
  const std::size_t n = 1 + body.size();
  return Term(std::make_shared<const Node>(Node{Kind::Lam, std::move(binder), std::move(body), Term(), n}));
}

Term Term::app(Term function, Term argument) {
  const std::size_t n = 1 + function.size() + argument.size();
  return Term(std::make_shared<const Node>(Node{Kind::App, {}, std::move(function), std::move(argument), n}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const {
  if (node_->kind == Kind::App) throw std::logic_error("application has no name");
  return node_->name;
}

const Term& Term::body() const {
  if (node_->kind != Kind::Lam) throw std::logic_error("not an abstraction");
  return node_->left;
}

const Term& Term::function() const {
  if (node_->kind != Kind::App) throw std::logic_error("not an application");
  return node_->left;
}

const Term& Term::argument() const {
  if (node_->kind != Kind::App) throw std::logic_error("not an application");
  return node_->right;
}

std::size_t Term::size() const noexcept { return node_->size; }

bool operator==(const Term& lhs, const Term& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.kind() != rhs.kind() || lhs.size() != rhs.size()) return false;
  switch (lhs.kind()) {
    case Term::Kind::Var:
      return lhs.name() == rhs.name();
    case Term::Kind::Lam:
      return lhs.name() == rhs.name() && lhs.body() == rhs.body();
    case Term::Kind::App:
      return lhs.function() == rhs.function() && lhs.argument() == rhs.argument();
  }
  return false;
}

Term apply(Term function, std::initializer_list<Term> arguments) {
  for (const Term& a : arguments) function = Term::app(std::move(function), a);
  return function;
}

Term apply(Term function, const std::vector<Term>& arguments) {
  for (const Term& a : arguments) function = Term::app(std::move(function), a);
  return function;
}

Term abstract(std::initializer_list<std::string> binders, Term body) {
  for (auto it = std::rbegin(binders); it != std::rend(binders); ++it) {
    body = Term::lam(*it, std::move(body));
  }
  return body;
}

bool is_identifier(std::string_view text) noexcept {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '\''; });
}

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      break;
    case Term::Kind::Lam:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      break;
    case Term::Kind::App:
      collect_free(t.function(), bound, out);
      collect_free(t.argument(), bound, out);
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }

std::string fresh_name(std::string base, const std::set<std::string>& avoid) {
  while (avoid.count(base) != 0) base += '\'';
  return base;
}

Term substitute(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::App:
      return Term::app(substitute(t.function(), s), substitute(t.argument(), s));
    case Term::Kind::Lam:
      break;
  }

  const std::string& binder = t.name();
  const std::set<std::string> body_free = free_vars(t.body());
  Substitution inner;
  std::set<std::string> inserted_free;
  for (const auto& [name, value] : s) {
    if (name == binder || body_free.count(name) == 0) continue;
    inner.emplace(name, value);
    const auto fv = free_vars(value);
    inserted_free.insert(fv.begin(), fv.end());
  }
  if (inner.empty()) return t;

  if (inserted_free.count(binder) == 0) {
    return Term::lam(binder, substitute(t.body(), inner));
  }
  std::set<std::string> avoid = inserted_free;
  avoid.insert(body_free.begin(), body_free.end());
  std::string renamed = fresh_name(binder, avoid);
  inner.emplace(binder, Term::var(renamed));
  return Term::lam(std::move(renamed), substitute(t.body(), inner));
}

Term mk_I() { return Term::lam("x", Term::var("x")); }

Term mk_T() { return abstract({"x", "y"}, Term::var("x")); }

Term mk_F() { return abstract({"x", "y"}, Term::var("y")); }

Term mk_pair(const Term& m, const Term& n) {
  std::set<std::string> avoid = free_vars(m);
  const auto fn = free_vars(n);
  avoid.insert(fn.begin(), fn.end());
  const std::string x = fresh_name("x", avoid);
  return Term::lam(x, apply(Term::var(x), {m, n}));
}

Term mk_tuple(const std::vector<Term>& us) {
  Term acc = mk_I();
  for (const Term& u : us) acc = mk_pair(acc, u);
  return acc;
}

}  // namespace lamnum
