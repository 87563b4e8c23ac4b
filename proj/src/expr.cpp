#include "latcon/expr.hpp"

#include <cctype>
#include <charconv>

#include "latcon/constructions.hpp"
#include "latcon/error.hpp"
#include "latcon/io.hpp"

namespace latcon {

namespace {

struct Keyword {
  std::string_view name;
  LatticeExpr::Kind kind;
};

constexpr Keyword kKeywords[] = {
    {"chain", LatticeExpr::Kind::chain}, {"B2", LatticeExpr::Kind::b2},
    {"M3", LatticeExpr::Kind::m3},       {"N5", LatticeExpr::Kind::n5},
    {"K", LatticeExpr::Kind::k},         {"div", LatticeExpr::Kind::div},
    {"file", LatticeExpr::Kind::file},   {"osum", LatticeExpr::Kind::osum},
    {"hsum", LatticeExpr::Kind::hsum},   {"ihsum", LatticeExpr::Kind::ihsum},
    {"D", LatticeExpr::Kind::dilate},
};

std::string_view keyword(LatticeExpr::Kind kind) {
  for (const auto& k : kKeywords) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LatticeExpr parse() {
    LatticeExpr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(pos_ + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "'"
                               : "expected '" + std::string(1, c) + "' before end of input");
    }
    ++pos_;
  }

  std::string_view identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "expected a name" : "unexpected end of input");
    return text_.substr(start, pos_ - start);
  }

  long long number() {
    skip_space();
    long long value = 0;
    const char* begin = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return value;
  }

  std::string quoted() {
    expect('"');
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ == text_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  LatticeExpr expression() {
    const std::size_t start = (skip_space(), pos_);
    const std::string_view name = identifier();
    LatticeExpr e;
    bool known = false;
    for (const auto& k : kKeywords) {
      if (k.name == name) {
        e.kind = k.kind;
        known = true;
      }
    }
    if (!known) {
      pos_ = start;
      fail("unknown name '" + std::string(name) + "'");
    }
    using Kind = LatticeExpr::Kind;
    switch (e.kind) {
      case Kind::b2:
      case Kind::m3:
      case Kind::n5:
      case Kind::k:
        if (peek('(')) fail(std::string(name) + " takes no arguments");
        return e;
      case Kind::chain:
      case Kind::div:
        expect('(');
        e.number = number();
        close(name, 1);
        return e;
      case Kind::file:
        expect('(');
        e.path = quoted();
        close(name, 1);
        return e;
      case Kind::ihsum:
        expect('(');
        e.args.push_back(expression());
        separator(name, 4, 1);
        e.low = quoted();
        separator(name, 4, 2);
        e.high = quoted();
        separator(name, 4, 3);
        e.args.push_back(expression());
        close(name, 4);
        return e;
      case Kind::osum:
      case Kind::hsum:
      case Kind::dilate: {
        expect('(');
        e.args.push_back(expression());
        while (peek(',')) {
          ++pos_;
          e.args.push_back(expression());
        }
        expect(')');
        const std::size_t n = e.args.size();
        const bool ok = e.kind == Kind::osum ? n == 2 : e.kind == Kind::dilate ? n == 1 : n >= 2;
        if (!ok) {
          throw Error(ErrorKind::ArityError,
                      std::string(name) + " got " + std::to_string(n) + " argument(s)");
        }
        return e;
      }
    }
    return e;
  }

  void separator(std::string_view name, std::size_t arity, std::size_t seen) {
    if (peek(')')) {
      throw Error(ErrorKind::ArityError, std::string(name) + " takes " + std::to_string(arity) +
                                             " arguments, got " + std::to_string(seen));
    }
    expect(',');
  }

  void close(std::string_view name, std::size_t arity) {
    if (peek(',')) {
      throw Error(ErrorKind::ArityError,
                  std::string(name) + " takes " + std::to_string(arity) + " argument(s)");
    }
    expect(')');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

LatticeExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const LatticeExpr& expr) {
  using Kind = LatticeExpr::Kind;
  std::string out(keyword(expr.kind));
  switch (expr.kind) {
    case Kind::b2:
    case Kind::m3:
    case Kind::n5:
    case Kind::k:
      return out;
    case Kind::chain:
    case Kind::div:
      return out + "(" + std::to_string(expr.number) + ")";
    case Kind::file:
      return out + "(" + quote(expr.path) + ")";
    case Kind::ihsum:
      return out + "(" + render(expr.args.at(0)) + "," + quote(expr.low) + "," +
             quote(expr.high) + "," + render(expr.args.at(1)) + ")";
    case Kind::osum:
    case Kind::hsum:
    case Kind::dilate:
      break;
  }
  out += '(';
  for (std::size_t i = 0; i < expr.args.size(); ++i) {
    if (i > 0) out += ',';
    out += render(expr.args[i]);
  }
  return out + ')';
}

Lattice eval(const LatticeExpr& expr) {
  using Kind = LatticeExpr::Kind;
  switch (expr.kind) {
    case Kind::chain:
    case Kind::div: {
      const long long params[] = {expr.number};
      return named(keyword(expr.kind), params);
    }
    case Kind::b2:
    case Kind::m3:
    case Kind::n5:
    case Kind::k:
      return named(keyword(expr.kind));
    case Kind::file:
      return read_lattice_file(expr.path);
    case Kind::osum:
      return ordinal_sum(eval(expr.args.at(0)), eval(expr.args.at(1))).lattice;
    case Kind::hsum: {
      std::vector<Lattice> family;
      for (const auto& arg : expr.args) family.push_back(eval(arg));
      return horizontal_sum(family).lattice;
    }
    case Kind::ihsum: {
      const Lattice base = eval(expr.args.at(0));
      return interval_hsum(base, base.at(expr.low), base.at(expr.high), eval(expr.args.at(1)))
          .lattice;
    }
    case Kind::dilate:
      return dilate(eval(expr.args.at(0))).lattice;
  }
  throw Error(ErrorKind::BadParam, "unknown expression kind");
}

}  // namespace latcon
