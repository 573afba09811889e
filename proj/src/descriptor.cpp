#include "contentlab/descriptor.hpp"

#include <cctype>
#include <charconv>

#include "contentlab/quotient.hpp"

namespace contentlab {

namespace {

struct Expr {
  enum class Kind { integer, symbol, add, sub, mul, neg, pow, tuple };
  Kind kind;
  std::size_t pos = 0;
  long long value = 0;
  std::string name{};
  std::vector<Expr> kids{};
};

class Parser {
 public:
  Parser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

  RingPtr ring() {
    skip();
    const std::size_t at = pos_;
    const std::string id = ident("ring constructor");
    if (id == "Z") {
      expect('/');
      skip();
      const std::size_t npos = pos_;
      const std::size_t n = number();
      return guarded(npos, [&] { return make_zmod(n, limits_); });
    }
    if (id == "trunc") {
      expect('(');
      RingPtr inner = ring();
      expect(',');
      skip();
      const std::size_t dpos = pos_;
      const std::size_t d = number();
      expect(')');
      return guarded(dpos, [&] { return make_truncated_poly_ring(inner, d, limits_).first; });
    }
    if (id == "prod") {
      expect('(');
      RingPtr a = ring();
      expect(',');
      RingPtr b = ring();
      expect(')');
      return guarded(at, [&] { return make_product(a, b, limits_); });
    }
    if (id == "quot") {
      expect('(');
      RingPtr inner = ring();
      expect(';');
      std::vector<Elem> gens;
      do {
        const Expr e = expr();
        gens.push_back(eval_ring(e, *inner));
      } while (accept(','));
      expect(')');
      return guarded(at, [&] { return make_quotient(inner, ideal_generate(inner, gens)).first; });
    }
    throw ParseError(Errc::unknown_constructor, at, "Z, trunc, prod or quot",
                     "unknown ring constructor '" + id + "' at position " + std::to_string(at));
  }

  AlgebraPtr algebra(const RingPtr& base) {
    skip();
    const std::size_t at = pos_;
    const std::string id = ident("algebra constructor");
    if (id == "id") return guarded(at, [&] { return alg_identity(base, limits_); });
    if (id == "trunc") {
      expect('(');
      skip();
      const std::size_t dpos = pos_;
      const std::size_t d = number();
      expect(')');
      return guarded(dpos, [&] { return alg_truncated(base, d, limits_); });
    }
    if (id == "quad") {
      expect('(');
      const Expr e = expr();
      const Elem a = eval_ring(e, *base);
      expect(')');
      return guarded(at, [&] { return alg_quadratic(base, a, limits_); });
    }
    if (id == "group") {
      expect('(');
      skip();
      const std::size_t zpos = pos_;
      if (ident("Z") != "Z") throw syntax(zpos, "Z");
      expect('/');
      skip();
      const std::size_t npos = pos_;
      const std::size_t n = number();
      expect(')');
      return guarded(npos, [&] { return alg_group(base, n, limits_); });
    }
    if (id == "monoid") {
      expect('(');
      const std::size_t start = pos_;
      const std::size_t close = text_.rfind(')');
      if (close == std::string_view::npos || close < start) throw syntax(text_.size(), "')'");
      std::string path(trim(text_.substr(start, close - start)));
      pos_ = close + 1;
      return guarded(start, [&] { return alg_monoid(base, MonoidTable::read(path), limits_); });
    }
    throw ParseError(Errc::unknown_constructor, at, "id, trunc, quad, group or monoid",
                     "unknown algebra constructor '" + id + "' at position " + std::to_string(at));
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip();
      if (peek() == '+' || peek() == '-') {
        const char op = text_[pos_];
        const std::size_t at = pos_++;
        Expr rhs = term();
        Expr node{op == '+' ? Expr::Kind::add : Expr::Kind::sub, at};
        node.kids = {std::move(lhs), std::move(rhs)};
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) throw syntax(pos_, "end of input");
  }

  Elem eval_ring(const Expr& e, const FiniteRing& r) {
    if (r.cover()) return r.project_from_cover(eval_ring(e, *r.cover()));
    switch (e.kind) {
      case Expr::Kind::integer: return r.from_int(e.value);
      case Expr::Kind::symbol:
        if (auto v = r.symbol(e.name)) return *v;
        throw ParseError(Errc::syntax, e.pos, "symbol", "unknown symbol '" + e.name + "' in ring " + r.descriptor());
      case Expr::Kind::add: return r.add(eval_ring(e.kids[0], r), eval_ring(e.kids[1], r));
      case Expr::Kind::sub: return r.sub(eval_ring(e.kids[0], r), eval_ring(e.kids[1], r));
      case Expr::Kind::mul: return r.mul(eval_ring(e.kids[0], r), eval_ring(e.kids[1], r));
      case Expr::Kind::neg: return r.neg(eval_ring(e.kids[0], r));
      case Expr::Kind::pow: return r.pow(eval_ring(e.kids[0], r), static_cast<std::uint64_t>(e.kids[1].value));
      case Expr::Kind::tuple:
        if (!r.is_product())
          throw ParseError(Errc::syntax, e.pos, "element", "pair literal in non-product ring " + r.descriptor());
        return r.pair(eval_ring(e.kids[0], *r.left()), eval_ring(e.kids[1], *r.right()));
    }
    return r.zero();
  }

  std::vector<Elem> eval_alg(const Expr& e, const FreeAlgebra& s) {
    switch (e.kind) {
      case Expr::Kind::integer: return s.embed(s.base()->from_int(e.value));
      case Expr::Kind::symbol: return symbol(e, s);
      case Expr::Kind::add: return s.add(eval_alg(e.kids[0], s), eval_alg(e.kids[1], s));
      case Expr::Kind::sub: return s.add(eval_alg(e.kids[0], s), s.neg(eval_alg(e.kids[1], s)));
      case Expr::Kind::mul: return s.multiply(eval_alg(e.kids[0], s), eval_alg(e.kids[1], s));
      case Expr::Kind::neg: return s.neg(eval_alg(e.kids[0], s));
      case Expr::Kind::pow: {
        const auto b = eval_alg(e.kids[0], s);
        std::vector<Elem> acc = s.unit();
        for (long long k = 0; k < e.kids[1].value; ++k) acc = s.multiply(acc, b);
        return acc;
      }
      case Expr::Kind::tuple: return s.embed(eval_ring(e, *s.base()));
    }
    return s.zero();
  }

 private:
  template <class Fn>
  auto guarded(std::size_t at, Fn&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(err.code(), at, "", std::string(errc_name(err.code())) + " error at position " +
                                               std::to_string(at) + ": " + err.what());
    }
  }

  std::vector<Elem> symbol(const Expr& e, const FreeAlgebra& s) {
    if (!s.generator_symbol().empty() && e.name == s.generator_symbol()) {
      if (s.generator_basis()) return s.basis(*s.generator_basis());
      // trunc(1) has x = 0, group(Z/1) has t = 1.
      return s.kind() == Presentation::group ? s.unit() : s.zero();
    }
    for (std::size_t i = 0; i < s.rank(); ++i)
      if (s.basis_name(i) == e.name) return s.basis(i);
    if (s.base()->symbol(e.name)) return s.embed(eval_ring(e, *s.base()));
    throw ParseError(Errc::syntax, e.pos, "symbol", "unknown symbol '" + e.name + "' in algebra " + s.descriptor());
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip();
      if (peek() != '*') return lhs;
      const std::size_t at = pos_++;
      Expr rhs = unary();
      Expr node{Expr::Kind::mul, at};
      node.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
  }

  Expr unary() {
    skip();
    if (peek() == '-') {
      const std::size_t at = pos_++;
      Expr node{Expr::Kind::neg, at};
      node.kids.push_back(unary());
      return node;
    }
    Expr base = primary();
    skip();
    if (peek() == '^') {
      const std::size_t at = pos_++;
      skip();
      Expr exponent{Expr::Kind::integer, pos_};
      exponent.value = static_cast<long long>(number());
      Expr node{Expr::Kind::pow, at};
      node.kids = {std::move(base), std::move(exponent)};
      return node;
    }
    return base;
  }

  Expr primary() {
    skip();
    const std::size_t at = pos_;
    if (peek() == '(') {
      ++pos_;
      Expr first = expr();
      if (accept(',')) {
        Expr second = expr();
        expect(')');
        Expr node{Expr::Kind::tuple, at};
        node.kids = {std::move(first), std::move(second)};
        return node;
      }
      expect(')');
      return first;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Expr node{Expr::Kind::integer, at};
      node.value = static_cast<long long>(number());
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      Expr node{Expr::Kind::symbol, at};
      node.name = ident("symbol");
      return node;
    }
    throw syntax(at, "integer, symbol or '('");
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw syntax(pos_, std::string("'") + c + "'");
  }

  std::string ident(const char* what) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      throw syntax(start, what);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) throw syntax(start, "integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  ParseError syntax(std::size_t at, const std::string& expected) const {
    std::string got = at < text_.size() ? "'" + std::string(1, text_[at]) + "'" : "end of input";
    return ParseError(Errc::syntax, at, expected,
                      "syntax error at position " + std::to_string(at) + ": expected " + expected + ", got " + got);
  }

  std::string_view text_;
  const Limits& limits_;
  std::size_t pos_ = 0;
};

void require_nonempty(std::string_view text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return;
  throw ParseError(Errc::syntax, 0, "descriptor", "empty descriptor");
}

}  // namespace

RingPtr parse_ring(std::string_view text, const Limits& limits) {
  require_nonempty(text);
  Parser p(text, limits);
  RingPtr r = p.ring();
  p.finish();
  return r;
}

AlgebraPtr parse_algebra(std::string_view text, const RingPtr& base, const Limits& limits) {
  require_nonempty(text);
  Parser p(text, limits);
  AlgebraPtr s = p.algebra(base);
  p.finish();
  return s;
}

Elem parse_ring_element(std::string_view text, const RingPtr& ring) {
  require_nonempty(text);
  Limits limits;
  Parser p(text, limits);
  const auto e = p.expr();
  p.finish();
  return p.eval_ring(e, *ring);
}

AlgebraElement parse_element(std::string_view text, const AlgebraPtr& algebra) {
  require_nonempty(text);
  Limits limits;
  Parser p(text, limits);
  const auto e = p.expr();
  p.finish();
  return {algebra, p.eval_alg(e, *algebra)};
}

}  // namespace contentlab
