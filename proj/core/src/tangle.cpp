#include "knotsieve/tangle.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>

#include "knotsieve/errors.hpp"

namespace knotsieve {

Tangle Tangle::integer(int k) {
  if (k == 0) return zero();
  return Tangle(std::make_shared<const Node>(Node{Kind::kInteger, k, std::abs(k), nullptr, nullptr}));
}

Tangle Tangle::zero() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kZero, 0, 0, nullptr, nullptr});
  return Tangle(node);
}

Tangle Tangle::infinity() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::kInfinity, 0, 0, nullptr, nullptr});
  return Tangle(node);
}

Tangle Tangle::sum(const Tangle& left, const Tangle& right) {
  return Tangle(std::make_shared<const Node>(
      Node{Kind::kSum, 0, left.crossing_count() + right.crossing_count(), left.node_, right.node_}));
}

Tangle Tangle::product(const Tangle& left, const Tangle& right) {
  return Tangle(std::make_shared<const Node>(Node{
      Kind::kProduct, 0, left.crossing_count() + right.crossing_count(), left.node_, right.node_}));
}

bool operator==(const Tangle& a, const Tangle& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Tangle::Kind::kInteger: return a.value() == b.value();
    case Tangle::Kind::kZero:
    case Tangle::Kind::kInfinity: return true;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

enum class Context { kTop, kSumLeft, kSumRight, kProductLeft, kProductRight };

void print(const Tangle& t, Context ctx, std::string& out) {
  switch (t.kind()) {
    case Tangle::Kind::kInteger: out += std::to_string(t.value()); return;
    case Tangle::Kind::kZero: out += '0'; return;
    case Tangle::Kind::kInfinity: out += "inf"; return;
    case Tangle::Kind::kSum: {
      bool paren = ctx == Context::kSumRight || ctx == Context::kProductLeft ||
                   ctx == Context::kProductRight;
      if (paren) out += '(';
      print(t.left(), Context::kSumLeft, out);
      out += '+';
      print(t.right(), Context::kSumRight, out);
      if (paren) out += ')';
      return;
    }
    case Tangle::Kind::kProduct: {
      bool paren = ctx == Context::kProductRight;
      if (paren) out += '(';
      print(t.left(), Context::kProductLeft, out);
      out += '*';
      print(t.right(), Context::kProductRight, out);
      if (paren) out += ')';
      return;
    }
  }
}

class ConwayParser {
 public:
  explicit ConwayParser(std::string_view text) : text_(text) {}

  Tangle run() {
    Tangle t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return t;
  }

 private:
  Tangle expr() {
    Tangle t = term();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        t = Tangle::sum(t, term());
      } else {
        return t;
      }
    }
  }

  Tangle term() {
    Tangle t = factor();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        t = Tangle::product(t, factor());
      } else {
        return t;
      }
    }
  }

  Tangle factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      Tangle t = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (text_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return Tangle::infinity();
    }
    bool neg = false;
    if (text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("twist too large");
    int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return Tangle::integer(neg ? -k : k);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tangle: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

TangleEnds unit_crossing(DiagramBuilder& b, int sign) {
  int c = b.add_crossing();
  // Positive: over-strand SW-NE, slots SE, NE, NW, SW counterclockwise.
  // Negative: over-strand NW-SE, slots SW, SE, NE, NW.
  if (sign > 0) return {b.endpoint(c, 2), b.endpoint(c, 1), b.endpoint(c, 3), b.endpoint(c, 0)};
  return {b.endpoint(c, 3), b.endpoint(c, 2), b.endpoint(c, 0), b.endpoint(c, 1)};
}

TangleEnds add_ends(DiagramBuilder& b, const TangleEnds& l, const TangleEnds& r) {
  b.link(l.ne, r.nw);
  b.link(l.se, r.sw);
  return {l.nw, r.ne, l.sw, r.se};
}

}  // namespace

std::string Tangle::to_string() const {
  std::string out;
  print(*this, Context::kTop, out);
  return out;
}

Tangle Tangle::parse(std::string_view text) { return ConwayParser(text).run(); }

TangleEnds build_tangle(DiagramBuilder& b, const Tangle& t) {
  switch (t.kind()) {
    case Tangle::Kind::kInteger: {
      int sign = t.value() > 0 ? 1 : -1;
      TangleEnds ends = unit_crossing(b, sign);
      for (int i = 1; i < std::abs(t.value()); ++i) ends = add_ends(b, ends, unit_crossing(b, sign));
      return ends;
    }
    case Tangle::Kind::kZero: {
      auto [a, c] = b.add_wire();
      auto [d, e] = b.add_wire();
      return {a, c, d, e};
    }
    case Tangle::Kind::kInfinity: {
      auto [a, c] = b.add_wire();
      auto [d, e] = b.add_wire();
      return {a, d, c, e};
    }
    case Tangle::Kind::kSum: {
      TangleEnds l = build_tangle(b, t.left());
      TangleEnds r = build_tangle(b, t.right());
      return add_ends(b, l, r);
    }
    case Tangle::Kind::kProduct: {
      int first = b.crossing_count();
      TangleEnds l = build_tangle(b, t.left());
      b.reflect_crossings(first, b.crossing_count());
      TangleEnds reflected{l.nw, l.sw, l.ne, l.se};
      TangleEnds r = build_tangle(b, t.right());
      return add_ends(b, reflected, r);
    }
  }
  throw std::logic_error("unknown tangle kind");
}

Embedding closure_embedding(const Tangle& t, ClosureMode mode) {
  DiagramBuilder b;
  TangleEnds e = build_tangle(b, t);
  if (mode == ClosureMode::kNumerator) {
    b.link(e.nw, e.ne);
    b.link(e.sw, e.se);
  } else {
    b.link(e.nw, e.sw);
    b.link(e.ne, e.se);
  }
  return b.finish();
}

PlanarDiagram tangle_closure(const Tangle& t, ClosureMode mode) {
  return closure_embedding(t, mode).to_diagram();
}

Fraction Fraction::of(const mpz_class& p, const mpz_class& q) {
  if (p == 0 && q == 0) throw std::domain_error("fraction 0/0");
  if (q == 0) return infinity();
  mpz_class g = gcd(p, q);
  Fraction f{p / g, q / g};
  if (f.den < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  return f;
}

std::string Fraction::to_string() const {
  if (is_infinite()) return "inf";
  if (den == 1) return num.get_str();
  return num.get_str() + "/" + den.get_str();
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.is_infinite() || b.is_infinite()) return Fraction::infinity();
  return Fraction::of(a.num * b.den + b.num * a.den, a.den * b.den);
}

namespace {

bool is_integral(const Tangle& t) {
  return t.kind() == Tangle::Kind::kInteger || t.kind() == Tangle::Kind::kZero;
}

// Tangles whose diagonal reflection is an integer tangle.
bool reflects_to_integral(const Tangle& t) {
  return (t.kind() == Tangle::Kind::kInteger && std::abs(t.value()) == 1) ||
         t.kind() == Tangle::Kind::kInfinity;
}

std::optional<std::set<Fraction>> reach(const Tangle& t, bool vary) {
  using Set = std::set<Fraction>;
  switch (t.kind()) {
    case Tangle::Kind::kInteger: {
      Set s;
      int k = t.value();
      if (!vary) {
        s.insert(Fraction::of(k, 1));
        return s;
      }
      for (int j = -std::abs(k); j <= std::abs(k); ++j)
        if ((j - k) % 2 == 0) s.insert(Fraction::of(j, 1));
      return s;
    }
    case Tangle::Kind::kZero: return Set{Fraction::of(0, 1)};
    case Tangle::Kind::kInfinity: return Set{Fraction::infinity()};
    case Tangle::Kind::kSum: {
      if (!is_integral(t.left()) && !is_integral(t.right())) return std::nullopt;
      auto l = reach(t.left(), vary);
      auto r = reach(t.right(), vary);
      if (!l || !r) return std::nullopt;
      Set s;
      for (const auto& a : *l)
        for (const auto& c : *r) s.insert(a + c);
      return s;
    }
    case Tangle::Kind::kProduct: {
      bool ok = is_integral(t.right()) || reflects_to_integral(t.left());
      if (!ok) return std::nullopt;
      auto l = reach(t.left(), vary);
      auto r = reach(t.right(), vary);
      if (!l || !r) return std::nullopt;
      Set s;
      for (const auto& a : *l)
        for (const auto& c : *r) s.insert(a.inverse() + c);
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Fraction> tangle_fraction(const Tangle& t) {
  auto s = reach(t, false);
  if (!s || s->size() != 1) return std::nullopt;
  return *s->begin();
}

std::optional<std::set<Fraction>> reachable_fractions(const Tangle& t) { return reach(t, true); }

}  // namespace knotsieve
