#include "knotsieve/generation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "knotsieve/errors.hpp"

namespace knotsieve {

std::string_view to_string(DiagramClass c) {
  return c == DiagramClass::kAlgebraic ? "algebraic" : "polyhedral";
}

DiagramClass parse_diagram_class(std::string_view text) {
  if (text == "algebraic" || text == "alg") return DiagramClass::kAlgebraic;
  if (text == "polyhedral" || text == "poly") return DiagramClass::kPolyhedral;
  throw ParseError("unknown diagram class '" + std::string(text) + "'");
}

std::string GenerationCursor::to_string() const {
  return std::string(knotsieve::to_string(diagram_class)) + ":" + std::to_string(budget) + ":" +
         std::to_string(position);
}

GenerationCursor GenerationCursor::parse(std::string_view text) {
  auto c1 = text.find(':');
  auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ParseError("bad cursor '" + std::string(text) + "'");
  GenerationCursor cur;
  cur.diagram_class = parse_diagram_class(text.substr(0, c1));
  auto b = text.substr(c1 + 1, c2 - c1 - 1);
  auto p = text.substr(c2 + 1);
  auto r1 = std::from_chars(b.data(), b.data() + b.size(), cur.budget);
  auto r2 = std::from_chars(p.data(), p.data() + p.size(), cur.position);
  if (r1.ec != std::errc() || r1.ptr != b.data() + b.size() || r2.ec != std::errc() ||
      r2.ptr != p.data() + p.size() || cur.budget < 1)
    throw ParseError("bad cursor '" + std::string(text) + "'");
  return cur;
}

namespace {

void collect_sum_operands(const Tangle& t, std::vector<Tangle>& out) {
  if (t.kind() == Tangle::Kind::kSum) {
    collect_sum_operands(t.left(), out);
    collect_sum_operands(t.right(), out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

std::string canonical_key(const Tangle& t) {
  switch (t.kind()) {
    case Tangle::Kind::kInteger:
      return std::to_string(t.value());
    case Tangle::Kind::kZero:
      return "0";
    case Tangle::Kind::kInfinity:
      return "inf";
    case Tangle::Kind::kProduct:
      return "P(" + canonical_key(t.left()) + "," + canonical_key(t.right()) + ")";
    case Tangle::Kind::kSum: {
      std::vector<Tangle> ops;
      collect_sum_operands(t, ops);
      std::vector<std::string> keys;
      for (const Tangle& o : ops) keys.push_back(canonical_key(o));
      std::sort(keys.begin(), keys.end());
      std::string k = "S(";
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) k += ",";
        k += keys[i];
      }
      return k + ")";
    }
  }
  return {};
}

struct TangleEnumerator::Impl {
  enum Kind : std::uint8_t { kInt, kReflInt, kReflSum };
  struct Term {
    Kind kind;
    int size;
    int value;           // twist for kInt and kReflInt
    std::uint32_t sum;   // index into sum_begin for kReflSum
  };

  std::vector<Term> terms;
  std::vector<std::uint32_t> size_begin{0, 0};  // terms of size s: [size_begin[s], size_begin[s+1])
  std::vector<std::uint64_t> sum_begin{0};
  std::vector<std::uint32_t> pool;
  int built = 0;  // terms of every size <= built are stored

  bool is_int(std::uint32_t id) const { return terms[id].kind == kInt; }

  // Calls emit(elements) for every Sum of size n in canonical order.
  template <class F>
  bool sums(int n, F&& emit) {
    std::vector<std::uint32_t> stack;
    return sums_rec(n, 0, n, false, stack, emit);
  }

  template <class F>
  bool sums_rec(int n, std::uint32_t min_id, int remaining, bool has_int,
                std::vector<std::uint32_t>& stack, F& emit) {
    int s0 = min_id < terms.size() ? terms[min_id].size : n;
    for (int s = std::max(1, s0); s <= remaining && s < n; ++s) {
      int r = remaining - s;
      if (r != 0 && r < s) continue;
      if (r == 0 && stack.empty()) continue;
      std::uint32_t lo = std::max(min_id, size_begin[s]);
      std::uint32_t hi = size_begin[s + 1];
      for (std::uint32_t id = lo; id < hi; ++id) {
        bool integer = is_int(id);
        if (integer && has_int) continue;
        stack.push_back(id);
        bool go = r == 0 ? emit(stack) : sums_rec(n, id, r, has_int || integer, stack, emit);
        stack.pop_back();
        if (!go) return false;
      }
    }
    return true;
  }

  void build_up_to(int m) {
    while (built < m) {
      int s = built + 1;
      terms.push_back({kInt, s, s, 0});
      terms.push_back({kInt, s, -s, 0});
      if (s >= 2) {
        terms.push_back({kReflInt, s, s, 0});
        terms.push_back({kReflInt, s, -s, 0});
      }
      std::vector<Term> refl;
      sums(s, [&](const std::vector<std::uint32_t>& elems) {
        pool.insert(pool.end(), elems.begin(), elems.end());
        refl.push_back({kReflSum, s, 0, static_cast<std::uint32_t>(sum_begin.size() - 1)});
        sum_begin.push_back(pool.size());
        return true;
      });
      terms.insert(terms.end(), refl.begin(), refl.end());
      size_begin.push_back(static_cast<std::uint32_t>(terms.size()));
      built = s;
    }
  }

  // The tangle X with term = R(X), for reflected terms.
  Tangle inner(std::uint32_t id) const {
    const Term& t = terms[id];
    if (t.kind == kReflInt) return Tangle::integer(t.value);
    return sum_tangle(pool.data() + sum_begin[t.sum], pool.data() + sum_begin[t.sum + 1]);
  }

  Tangle term_tangle(std::uint32_t id) const {
    if (terms[id].kind == kInt) return Tangle::integer(terms[id].value);
    return Tangle::product(inner(id), Tangle::zero());
  }

  // R(X1) + R(X2) + ... + [k] folded to the right as X1 * (X2 * (... * [k])).
  Tangle sum_tangle(const std::uint32_t* first, const std::uint32_t* last) const {
    std::optional<Tangle> acc;
    for (const std::uint32_t* p = first; p != last; ++p)
      if (is_int(*p)) acc = Tangle::integer(terms[*p].value);
    for (const std::uint32_t* p = last; p != first;) {
      --p;
      if (is_int(*p)) continue;
      acc = Tangle::product(inner(*p), acc ? *acc : Tangle::zero());
    }
    return *acc;
  }
};

TangleEnumerator::TangleEnumerator() : impl_(new Impl) {}
TangleEnumerator::~TangleEnumerator() { delete impl_; }

void TangleEnumerator::for_each(int n, std::uint64_t start,
                                const std::function<bool(std::uint64_t, const Tangle&)>& visit) {
  if (n < 1) throw std::invalid_argument("tangle size must be positive");
  impl_->build_up_to(n - 1);
  std::uint64_t pos = 0;
  auto offer = [&](auto&& make) {
    std::uint64_t here = pos++;
    if (here < start) return true;
    return visit(here, make());
  };
  if (!offer([&] { return Tangle::integer(n); })) return;
  if (!offer([&] { return Tangle::integer(-n); })) return;
  if (n >= 2) {
    if (!offer([&] { return Tangle::product(Tangle::integer(n), Tangle::zero()); })) return;
    if (!offer([&] { return Tangle::product(Tangle::integer(-n), Tangle::zero()); })) return;
  }
  Impl& im = *impl_;
  im.sums(n, [&](const std::vector<std::uint32_t>& elems) {
    if (pos + 2 <= start) {
      pos += 2;
      return true;
    }
    Tangle s = im.sum_tangle(elems.data(), elems.data() + elems.size());
    if (!offer([&] { return s; })) return false;
    return offer([&] { return Tangle::product(s, Tangle::zero()); });
  });
}

std::vector<Tangle> TangleEnumerator::all(int n) {
  std::vector<Tangle> out;
  for_each(n, 0, [&](std::uint64_t, const Tangle& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t TangleEnumerator::count(int n) {
  std::uint64_t c = 0;
  if (n < 1) return 0;
  if (n == 1) return 2;
  impl_->build_up_to(n - 1);
  impl_->sums(n, [&](const std::vector<std::uint32_t>&) {
    ++c;
    return true;
  });
  return 4 + 2 * c;
}

mpz_class normal_form_count(int n) {
  if (n < 1) return 0;
  // nonint[m]: non-twist terms of size m, i.e. R([+-m]) and R(S) for Sums S.
  std::vector<mpz_class> nonint(n + 1, 0);
  mpz_class result;
  for (int s = 1; s <= n; ++s) {
    std::vector<mpz_class> series(s + 1, 0);
    series[0] = 1;
    for (int m = 1; m < s; ++m) {
      if (nonint[m] == 0) continue;
      // multiply by (1 - x^m)^(-nonint[m])
      std::vector<mpz_class> next(s + 1, 0);
      for (int e = 0; e <= s; ++e) {
        if (series[e] == 0) continue;
        mpz_class choose = 1;
        for (int j = 0; e + j * m <= s; ++j) {
          if (j > 0) {
            choose *= nonint[m] + j - 1;
            choose /= j;
          }
          next[e + j * m] += series[e] * choose;
        }
      }
      series.swap(next);
    }
    // times 1 + 2x + 2x^2 + ... for the optional twist, minus the lone twist
    mpz_class sums = series[s];
    for (int k = 1; k <= s; ++k) sums += 2 * series[s - k];
    sums -= 2;
    if (s >= 2) nonint[s] = 2 + sums;
    result = s == 1 ? mpz_class(2) : 4 + 2 * sums;
  }
  return result;
}

mpz_class raw_tree_count(int n) {
  if (n < 1) return 0;
  std::vector<mpz_class> r(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    mpz_class pairs = 0;
    for (int a = 1; a < s; ++a) pairs += r[a] * r[s - a];
    r[s] = 2 + 2 * pairs;
  }
  return r[n];
}

std::string_view to_string(TrivializabilityMode m) {
  switch (m) {
    case TrivializabilityMode::kOff:
      return "off";
    case TrivializabilityMode::kSlot:
      return "slot";
    case TrivializabilityMode::kClosure:
      return "closure";
  }
  return {};
}

TrivializabilityMode parse_trivializability(std::string_view text) {
  if (text == "off") return TrivializabilityMode::kOff;
  if (text == "slot") return TrivializabilityMode::kSlot;
  if (text == "closure") return TrivializabilityMode::kClosure;
  throw ParseError("unknown trivializability mode '" + std::string(text) + "'");
}

bool is_algebraically_trivializable(const Tangle& t, TrivializabilityMode mode) {
  if (mode == TrivializabilityMode::kOff) return true;
  auto reach = reachable_fractions(t);
  if (!reach) return true;
  for (const Fraction& f : *reach) {
    if (mode == TrivializabilityMode::kSlot) {
      if (f.num == 0 || f.den == 0) return true;
    } else {
      if (abs(f.num) == 1 || f.den == 1) return true;
    }
  }
  return false;
}

void generate_closures(TangleEnumerator& tangles, int n, std::uint64_t start,
                       const std::function<bool(std::uint64_t)>& accept,
                       const std::function<bool(const Candidate&)>& visit) {
  tangles.for_each(n, start / 2, [&](std::uint64_t index, const Tangle& t) {
    for (int mode = 0; mode < 2; ++mode) {
      std::uint64_t pos = 2 * index + mode;
      if (pos < start || (accept && !accept(pos))) continue;
      ClosureMode cm = mode == 0 ? ClosureMode::kNumerator : ClosureMode::kDenominator;
      Candidate c{DiagramClass::kAlgebraic,
                  n,
                  pos,
                  (mode == 0 ? "N(" : "D(") + t.to_string() + ")",
                  closure_embedding(t, cm),
                  0};
      c.components = c.embedding.component_count();
      if (!visit(c)) return false;
    }
    return true;
  });
}

namespace {

// Compositions of n into k positive parts, in lexicographic order.
template <class F>
bool compositions(int n, int k, std::vector<int>& parts, F& f) {
  if (k == 1) {
    parts.push_back(n);
    bool go = f(parts);
    parts.pop_back();
    return go;
  }
  for (int first = 1; first <= n - (k - 1); ++first) {
    parts.push_back(first);
    bool go = compositions(n - first, k - 1, parts, f);
    parts.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

void generate_polyhedral(TangleEnumerator& tangles, int n,
                         const std::vector<ConwayPolyhedron>& catalog,
                         TrivializabilityMode mode, std::uint64_t start,
                         const std::function<bool(std::uint64_t)>& accept,
                         const std::function<bool(const Candidate&)>& visit) {
  if (catalog.empty()) throw std::invalid_argument("polyhedron catalog is empty");
  std::vector<std::vector<Tangle>> kept(1);
  std::vector<std::vector<std::string>> text(1);
  auto ensure = [&](int size) {
    while (static_cast<int>(kept.size()) <= size) {
      int s = static_cast<int>(kept.size());
      kept.emplace_back();
      text.emplace_back();
      for (const Tangle& t : tangles.all(s)) {
        if (!is_algebraically_trivializable(t, mode)) continue;
        kept.back().push_back(t);
        text.back().push_back(t.to_string());
      }
    }
  };
  std::uint64_t pos = 0;
  for (const ConwayPolyhedron& p : catalog) {
    const int v = p.vertex_count();
    if (n < v) continue;
    ensure(n - v + 1);
    std::vector<int> parts;
    auto per_composition = [&](const std::vector<int>& comp) {
      std::uint64_t total = 1;
      for (int c : comp) total *= kept[c].size();
      if (total == 0) return true;
      if (pos + total <= start) {
        pos += total;
        return true;
      }
      std::uint64_t skip = start > pos ? start - pos : 0;
      std::vector<std::size_t> digit(v, 0);
      for (int i = v - 1; i >= 0; --i) {
        digit[i] = skip % kept[comp[i]].size();
        skip /= kept[comp[i]].size();
      }
      pos = std::max(pos, start);
      std::vector<Tangle> slots;
      while (true) {
        std::uint64_t here = pos++;
        if (!accept || accept(here)) {
          slots.clear();
          std::string src = p.name + "[";
          for (int i = 0; i < v; ++i) {
            slots.push_back(kept[comp[i]][digit[i]]);
            if (i) src += ";";
            src += text[comp[i]][digit[i]];
          }
          src += "]";
          Candidate c{DiagramClass::kPolyhedral, n, here, std::move(src),
                      polyhedron_embedding(p, slots), 0};
          c.components = c.embedding.component_count();
          if (!visit(c)) return false;
        }
        int i = v - 1;
        while (i >= 0 && ++digit[i] == kept[comp[i]].size()) digit[i--] = 0;
        if (i < 0) break;
      }
      return true;
    };
    if (!compositions(n, v, parts, per_composition)) return;
  }
}

}  // namespace knotsieve
