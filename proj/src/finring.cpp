#include "contentlab/finring.hpp"

#include <algorithm>
#include <unordered_map>

namespace contentlab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_modulus: return "invalid-modulus";
    case Errc::size_cap: return "size-cap";
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::invalid_mult_set: return "invalid-mult-set";
    case Errc::invalid_monoid: return "invalid-monoid";
    case Errc::degenerate_depth: return "degenerate-depth";
    case Errc::syntax: return "syntax";
    case Errc::unknown_constructor: return "unknown-constructor";
    case Errc::io: return "io";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kTableLimit = 65536;

void check_ring_cap(std::size_t size, const Limits& limits, const char* what) {
  if (size > limits.max_ring || size > kTableLimit)
    throw Error(Errc::size_cap, std::string(what) + ": ring of size " + std::to_string(size) +
                                    " exceeds cap " + std::to_string(limits.max_ring));
}

// Wraps a composite name in parentheses when used as a coefficient or factor.
std::string as_factor(const std::string& s) {
  if (s.find_first_of("+-") == std::string::npos) return s;
  if (s.front() == '(' && s.back() == ')') return s;
  return "(" + s + ")";
}

}  // namespace

FiniteRing::FiniteRing(Spec spec)
    : size_(spec.size),
      add_(std::move(spec.add)),
      mul_(std::move(spec.mul)),
      zero_(spec.zero),
      one_(spec.one),
      units_(spec.size),
      zero_divisors_(spec.size),
      descriptor_(std::move(spec.descriptor)),
      names_(std::move(spec.names)),
      generator_(spec.generator),
      symbols_(std::move(spec.symbols)),
      left_(std::move(spec.left)),
      right_(std::move(spec.right)),
      cover_(std::move(spec.cover)),
      cover_image_(std::move(spec.cover_image)) {
  const std::size_t n = size_;
  neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem p = mul(a, b);
      if (p == one_) units_.set(a);
      if (p == zero_ && b != zero_) zero_divisors_.set(a);
    }
  }

  // Powers of a: walk until an element repeats; the repeated element is on
  // the cycle.
  stable_power_.assign(n, 0);
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (Elem a = 0; a < n; ++a) {
    ++stamp;
    Elem p = a;
    while (seen[p] != stamp) {
      seen[p] = stamp;
      p = mul(p, a);
    }
    stable_power_[a] = p;
  }

  if (names_.size() != n) {
    names_.resize(n);
    for (Elem a = 0; a < n; ++a) names_[a] = "#" + std::to_string(a);
  }
}

RingPtr FiniteRing::create(Spec spec) {
  if (spec.size == 0 || spec.size > kTableLimit)
    throw Error(Errc::size_cap, "ring size out of range");
  return RingPtr(new FiniteRing(std::move(spec)));
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FiniteRing::from_int(long long k) const {
  const bool negative = k < 0;
  unsigned long long m = negative ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Elem result = zero_;
  Elem step = one_;
  while (m) {
    if (m & 1) result = add(result, step);
    step = add(step, step);
    m >>= 1;
  }
  return negative ? neg(result) : result;
}

bool FiniteRing::same_tables(const FiniteRing& other) const {
  return size_ == other.size_ && zero_ == other.zero_ && one_ == other.one_ &&
         add_ == other.add_ && mul_ == other.mul_;
}

std::optional<Elem> FiniteRing::symbol(const std::string& name) const {
  for (const auto& [n, e] : symbols_)
    if (n == name) return e;
  return std::nullopt;
}

std::vector<Elem> RingMap::section() const {
  std::vector<Elem> out(target->size(), static_cast<Elem>(target->size()));
  for (Elem a = 0; a < source->size(); ++a)
    if (out[image[a]] == target->size()) out[image[a]] = a;
  return out;
}

bool RingMap::is_homomorphism() const {
  if (image.size() != source->size()) return false;
  if (image[source->zero()] != target->zero() || image[source->one()] != target->one())
    return false;
  for (Elem a = 0; a < source->size(); ++a)
    for (Elem b = 0; b < source->size(); ++b) {
      if (image[source->add(a, b)] != target->add(image[a], image[b])) return false;
      if (image[source->mul(a, b)] != target->mul(image[a], image[b])) return false;
    }
  return true;
}

RingPtr make_zmod(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(Errc::invalid_modulus, "modulus must be at least 1");
  check_ring_cap(n, limits, "Z/n");
  FiniteRing::Spec s;
  s.size = n;
  s.add.resize(n * n);
  s.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      s.add[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
      s.mul[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
    }
  s.zero = 0;
  s.one = static_cast<Elem>(1 % n);
  s.descriptor = "Z/" + std::to_string(n);
  for (std::size_t a = 0; a < n; ++a) s.names.push_back(std::to_string(a));
  return FiniteRing::create(std::move(s));
}

RingPtr make_product(const RingPtr& r1, const RingPtr& r2, const Limits& limits) {
  const std::size_t n1 = r1->size(), n2 = r2->size(), n = n1 * n2;
  check_ring_cap(n, limits, "prod");
  FiniteRing::Spec s;
  s.size = n;
  s.add.resize(n * n);
  s.mul.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    const Elem a1 = a / n2, a2 = a % n2;
    for (Elem b = 0; b < n; ++b) {
      const Elem b1 = b / n2, b2 = b % n2;
      s.add[a * n + b] = static_cast<std::uint16_t>(r1->add(a1, b1) * n2 + r2->add(a2, b2));
      s.mul[a * n + b] = static_cast<std::uint16_t>(r1->mul(a1, b1) * n2 + r2->mul(a2, b2));
    }
  }
  s.zero = static_cast<Elem>(r1->zero() * n2 + r2->zero());
  s.one = static_cast<Elem>(r1->one() * n2 + r2->one());
  s.descriptor = "prod(" + r1->descriptor() + "," + r2->descriptor() + ")";
  for (Elem a = 0; a < n; ++a)
    s.names.push_back("(" + r1->name(a / n2) + "," + r2->name(a % n2) + ")");
  s.left = r1;
  s.right = r2;
  return FiniteRing::create(std::move(s));
}

std::pair<RingPtr, RingElement> make_truncated_poly_ring(const RingPtr& r0, std::size_t d,
                                                         const Limits& limits) {
  if (d == 0) throw Error(Errc::invalid_modulus, "truncation depth must be at least 1");
  const std::size_t n0 = r0->size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= n0;
    check_ring_cap(n, limits, "trunc");
  }

  std::vector<Elem> coeffs(n * d);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t v = a;
    for (std::size_t i = 0; i < d; ++i) {
      coeffs[a * d + i] = static_cast<Elem>(v % n0);
      v /= n0;
    }
  }
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t i = d; i-- > 0;) idx = idx * n0 + c[i];
    return static_cast<std::uint16_t>(idx);
  };

  FiniteRing::Spec s;
  s.size = n;
  s.add.resize(n * n);
  s.mul.resize(n * n);
  std::vector<Elem> c(d);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* ca = &coeffs[a * d];
    for (std::size_t b = 0; b < n; ++b) {
      const Elem* cb = &coeffs[b * d];
      for (std::size_t i = 0; i < d; ++i) c[i] = r0->add(ca[i], cb[i]);
      s.add[a * n + b] = encode(c);
      std::fill(c.begin(), c.end(), r0->zero());
      for (std::size_t i = 0; i < d; ++i) {
        if (ca[i] == r0->zero()) continue;
        for (std::size_t j = 0; i + j < d; ++j) c[i + j] = r0->add(c[i + j], r0->mul(ca[i], cb[j]));
      }
      s.mul[a * n + b] = encode(c);
    }
  }

  std::vector<Elem> unit(d, r0->zero());
  unit[0] = r0->one();
  s.one = encode(unit);
  s.zero = encode(std::vector<Elem>(d, r0->zero()));
  std::vector<Elem> xc(d, r0->zero());
  if (d > 1) xc[1] = r0->one();
  const Elem x = encode(xc);
  s.generator = x;
  // a constant c of r0 has index c here
  s.symbols = r0->symbols();
  std::string var;
  for (const char* cand : {"x", "z", "w", "v", "u"})
    if (!r0->symbol(cand)) {
      var = cand;
      break;
    }
  if (var.empty()) var = "x" + std::to_string(r0->symbols().size());
  s.symbols.emplace_back(var, x);
  s.descriptor = "trunc(" + r0->descriptor() + "," + std::to_string(d) + ")";

  for (std::size_t a = 0; a < n; ++a) {
    std::string name;
    for (std::size_t i = 0; i < d; ++i) {
      const Elem ci = coeffs[a * d + i];
      if (ci == r0->zero()) continue;
      std::string term;
      const std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (mono.empty())
        term = r0->name(ci);
      else if (ci == r0->one())
        term = mono;
      else
        term = as_factor(r0->name(ci)) + "*" + mono;
      name += name.empty() ? term : "+" + term;
    }
    s.names.push_back(name.empty() ? r0->name(r0->zero()) : name);
  }
  auto ring = FiniteRing::create(std::move(s));
  return {ring, RingElement{ring, x}};
}

ElementClasses classify_elements(const FiniteRing& r) {
  const std::size_t n = r.size();
  ElementClasses out{ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n)};
  for (Elem a = 0; a < n; ++a) {
    if (r.is_unit(a)) out.units.set(a);
    if (r.is_zero_divisor(a)) out.zero_divisors.set(a);
    else out.regular.set(a);
    if (r.stable_power(a) == r.zero()) out.nilpotents.set(a);
    if (r.mul(a, a) == a) out.idempotents.set(a);
  }
  return out;
}

std::optional<std::string> check_axioms(const FiniteRing& r) {
  const std::size_t n = r.size();
  auto fail = [](const std::string& what, Elem a, Elem b, Elem c) {
    return what + " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
  };
  if (n > 1 && r.zero() == r.one()) return std::string("zero equals one in a nonzero ring");
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) return fail("additive identity", a, 0, 0);
    if (r.mul(a, r.one()) != a) return fail("multiplicative identity", a, 0, 0);
    if (r.add(a, r.neg(a)) != r.zero()) return fail("additive inverse", a, 0, 0);
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return fail("additive commutativity", a, b, 0);
      if (r.mul(a, b) != r.mul(b, a)) return fail("commutativity", a, b, 0);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return fail("additive associativity", a, b, c);
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return fail("associativity", a, b, c);
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return fail("distributivity", a, b, c);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Ring generators of r in canonical order: each is the least element not in
// the subring generated by the previous ones.
std::vector<Elem> ring_generators(const FiniteRing& r) {
  std::vector<Elem> gens;
  ElementSet reached(r.size());
  std::vector<Elem> list;
  auto close = [&](Elem start) {
    std::vector<Elem> frontier{start};
    if (reached.test(start)) return;
    reached.set(start);
    list.push_back(start);
    while (!frontier.empty()) {
      Elem a = frontier.back();
      frontier.pop_back();
      const std::size_t m = list.size();
      for (std::size_t i = 0; i < m; ++i) {
        for (Elem c : {r.add(a, list[i]), r.mul(a, list[i])}) {
          if (!reached.test(c)) {
            reached.set(c);
            list.push_back(c);
            frontier.push_back(c);
          }
        }
      }
    }
  };
  close(r.zero());
  close(r.one());
  for (Elem a = 0; a < r.size(); ++a) {
    if (reached.test(a)) continue;
    gens.push_back(a);
    close(a);
  }
  return gens;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  const Elem unset = static_cast<Elem>(n);
  const std::vector<Elem> gens = ring_generators(a);

  // Extends a partial map to the subring generated by its domain; false on
  // any inconsistency.
  auto extend = [&](std::vector<Elem>& map) {
    std::vector<Elem> known;
    for (Elem x = 0; x < n; ++x)
      if (map[x] != unset) known.push_back(x);
    for (std::size_t i = 0; i < known.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem x = known[i], y = known[j];
        const std::pair<Elem, Elem> cases[2] = {{a.add(x, y), b.add(map[x], map[y])},
                                                {a.mul(x, y), b.mul(map[x], map[y])}};
        for (auto [src, dst] : cases) {
          if (map[src] == unset) {
            map[src] = dst;
            known.push_back(src);
          } else if (map[src] != dst) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::vector<Elem> base(n, unset);
  base[a.zero()] = b.zero();
  base[a.one()] = b.one();
  if (!extend(base)) return std::nullopt;

  std::vector<Elem> result;
  auto search = [&](auto& self, std::size_t k, std::vector<Elem> map) -> bool {
    if (k == gens.size()) {
      std::vector<bool> hit(n, false);
      for (Elem x = 0; x < n; ++x) {
        if (map[x] == unset || hit[map[x]]) return false;
        hit[map[x]] = true;
      }
      result = std::move(map);
      return true;
    }
    const Elem g = gens[k];
    if (map[g] != unset) return self(self, k + 1, std::move(map));
    std::vector<bool> used(n, false);
    for (Elem x = 0; x < n; ++x)
      if (map[x] != unset) used[map[x]] = true;
    for (Elem t = 0; t < n; ++t) {
      if (used[t]) continue;
      std::vector<Elem> next = map;
      next[g] = t;
      if (extend(next) && self(self, k + 1, std::move(next))) return true;
    }
    return false;
  };
  if (!search(search, 0, base)) return std::nullopt;
  return result;
}

}  // namespace contentlab
