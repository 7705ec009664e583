#include "lamnum/parser.hpp"

#include <algorithm>
#include <utility>

namespace lamnum {

SyntaxError::SyntaxError(std::size_t offset, std::size_t line, std::size_t column, std::string expected)
    : std::runtime_error("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": expected " + expected),
      offset_(offset),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

DuplicateName::DuplicateName(std::string name)
    : std::runtime_error("duplicate definition '" + name + "'"), name_(std::move(name)) {}

void Program::define(std::string name, Term body) {
  if (find(name)) throw DuplicateName(std::move(name));
  defs_.push_back(Definition{std::move(name), std::move(body)});
}

void Program::extend(const Program& other) {
  for (const Definition& d : other.definitions()) define(d.name, d.body);
}

std::optional<Term> Program::find(std::string_view name) const {
  auto it = std::find_if(defs_.begin(), defs_.end(), [&](const Definition& d) { return d.name == name; });
  if (it == defs_.end()) return std::nullopt;
  return it->body;
}

namespace {

enum class Tok { Ident, Lambda, Dot, LParen, RParen, Less, Comma, Greater, Equals, Semicolon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      const std::size_t start = pos_;
      const std::size_t line = line_;
      const std::size_t column = pos_ - line_start_ + 1;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", start, line, column});
        return out;
      }
      const char c = text_[pos_];
      auto single = [&](Tok kind) {
        ++pos_;
        out.push_back({kind, std::string(1, c), start, line, column});
      };
      switch (c) {
        case '\\': single(Tok::Lambda); continue;
        case '.': single(Tok::Dot); continue;
        case '(': single(Tok::LParen); continue;
        case ')': single(Tok::RParen); continue;
        case '<': single(Tok::Less); continue;
        case ',': single(Tok::Comma); continue;
        case '>': single(Tok::Greater); continue;
        case '=': single(Tok::Equals); continue;
        case ';': single(Tok::Semicolon); continue;
        default: break;
      }
      if (text_.substr(pos_, 2) == "\xCE\xBB") {
        pos_ += 2;
        out.push_back({Tok::Lambda, "\xCE\xBB", start, line, column});
        continue;
      }
      if (ident_start(c)) {
        std::size_t end = pos_ + 1;
        while (end < text_.size() && (ident_start(text_[end]) || text_[end] == '\'' ||
                                      (text_[end] >= '0' && text_[end] <= '9'))) {
          ++end;
        }
        out.push_back({Tok::Ident, std::string(text_.substr(pos_, end - pos_)), start, line, column});
        pos_ = end;
        continue;
      }
      throw SyntaxError(start, line, column, "a term");
    }
  }

 private:
  static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Program& env) : tokens_(std::move(tokens)), env_(&env) {}

  Term term() {
    if (peek().kind == Tok::Lambda) return abstraction();
    return application();
  }

  bool at(Tok kind) const { return peek().kind == kind; }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(what);
    return tokens_[pos_++];
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw SyntaxError(t.offset, t.line, t.column, expected + ", found " + describe(t));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  static bool starts_atom(Tok kind) { return kind == Tok::Ident || kind == Tok::LParen || kind == Tok::Less; }

  Term abstraction() {
    expect(Tok::Lambda, "'\\'");
    std::vector<std::string> binders;
    binders.push_back(expect(Tok::Ident, "a binder name").text);
    while (at(Tok::Ident)) binders.push_back(tokens_[pos_++].text);
    expect(Tok::Dot, "'.' or another binder name");
    for (const auto& b : binders) scope_.push_back(b);
    Term body = term();
    scope_.resize(scope_.size() - binders.size());
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::lam(*it, std::move(body));
    return body;
  }

  Term application() {
    if (!starts_atom(peek().kind)) fail("a term");
    Term acc = atom();
    while (starts_atom(peek().kind)) acc = Term::app(std::move(acc), atom());
    if (at(Tok::Lambda)) acc = Term::app(std::move(acc), abstraction());
    return acc;
  }

  Term atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        ++pos_;
        if (std::find(scope_.begin(), scope_.end(), t.text) == scope_.end()) {
          if (auto def = env_->find(t.text)) return *def;
        }
        return Term::var(t.text);
      }
      case Tok::LParen: {
        ++pos_;
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Less: {
        ++pos_;
        Term first = term();
        expect(Tok::Comma, "','");
        Term second = term();
        expect(Tok::Greater, "'>'");
        return mk_pair(first, second);
      }
      default:
        fail("a term");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Program* env_;
  std::vector<std::string> scope_;
};

void pretty_rec(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += t.name();
      return;
    case Term::Kind::Lam:
      out += '\\';
      out += t.name();
      out += '.';
      pretty_rec(t.body(), out);
      return;
    case Term::Kind::App: {
      const Term& f = t.function();
      if (f.is_lam()) {
        out += '(';
        pretty_rec(f, out);
        out += ')';
      } else {
        pretty_rec(f, out);
      }
      out += ' ';
      const Term& a = t.argument();
      if (a.is_var()) {
        out += a.name();
      } else {
        out += '(';
        pretty_rec(a, out);
        out += ')';
      }
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view text, const Program& env) {
  Parser p(Lexer(text).run(), env);
  Term t = p.term();
  if (!p.at(Tok::End)) p.fail("end of input");
  return t;
}

Program parse_program(std::string_view text, const Program& base) {
  Program env = base;
  Program program;
  Parser p(Lexer(text).run(), env);
  while (!p.at(Tok::End)) {
    const Token name = p.expect(Tok::Ident, "a definition name");
    p.expect(Tok::Equals, "'='");
    Term body = p.term();
    p.expect(Tok::Semicolon, "';'");
    env.define(name.text, body);
    program.define(name.text, std::move(body));
  }
  return program;
}

std::string pretty(const Term& t) {
  std::string out;
  pretty_rec(t, out);
  return out;
}

}  // namespace lamnum
