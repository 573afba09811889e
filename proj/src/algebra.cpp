#include "contentlab/algebra.hpp"

#include "contentlab/quotient.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace contentlab {

namespace {

std::string as_factor(const std::string& s) {
  if (s.find_first_of("+-") == std::string::npos) return s;
  if (s.front() == '(' && s.back() == ')') return s;
  return "(" + s + ")";
}

std::string power_name(const std::string& sym, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return sym;
  return sym + "^" + std::to_string(k);
}

void require_same_algebra(const AlgebraElement& f, const AlgebraElement& g) {
  if (f.algebra != g.algebra) throw Error(Errc::domain_mismatch, "elements of different algebras");
}

}  // namespace

MonoidTable MonoidTable::cyclic_group(std::size_t order) {
  if (order == 0) throw Error(Errc::invalid_monoid, "group order must be positive");
  MonoidTable m;
  m.size = order;
  m.identity = 0;
  m.op.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) m.op[a * order + b] = (a + b) % order;
  return m;
}

MonoidTable MonoidTable::parse(std::istream& in, std::string source) {
  MonoidTable m;
  m.source = std::move(source);
  if (!(in >> m.size >> m.identity) || m.size == 0)
    throw Error(Errc::invalid_monoid, "monoid table: expected size and identity index");
  m.op.resize(m.size * m.size);
  for (auto& v : m.op)
    if (!(in >> v)) throw Error(Errc::invalid_monoid, "monoid table: truncated operation table");
  m.validate();
  return m;
}

MonoidTable MonoidTable::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open monoid table " + path);
  return parse(in, path);
}

void MonoidTable::validate() const {
  if (identity >= size) throw Error(Errc::invalid_monoid, "identity index out of range");
  for (auto v : op)
    if (v >= size) throw Error(Errc::invalid_monoid, "table entry out of range");
  for (std::size_t a = 0; a < size; ++a) {
    if (apply(identity, a) != a) throw Error(Errc::invalid_monoid, "identity law fails");
    for (std::size_t b = 0; b < size; ++b) {
      if (apply(a, b) != apply(b, a))
        throw Error(Errc::invalid_monoid, "monoid is not commutative at (" + std::to_string(a) + "," +
                                              std::to_string(b) + ")");
      for (std::size_t c = 0; c < size; ++c)
        if (apply(apply(a, b), c) != apply(a, apply(b, c)))
          throw Error(Errc::invalid_monoid, "monoid is not associative");
    }
  }
}

FreeAlgebra::FreeAlgebra(Spec spec, std::size_t size)
    : spec_(std::move(spec)),
      base_(spec_.base),
      rank_(spec_.rank),
      size_(size),
      consts_(spec_.consts),
      unit_(spec_.unit) {
  switch (spec_.kind) {
    case Presentation::identity: descriptor_ = "id"; break;
    case Presentation::truncated: descriptor_ = "trunc(" + std::to_string(spec_.depth) + ")"; break;
    case Presentation::quadratic: descriptor_ = "quad(" + base_->name(spec_.quad_param) + ")"; break;
    case Presentation::group: descriptor_ = "group(Z/" + std::to_string(spec_.group_order) + ")"; break;
    case Presentation::monoid:
      descriptor_ = "monoid(" + (spec_.monoid->source.empty() ? std::string("<table>") : spec_.monoid->source) + ")";
      break;
  }
  spec_.consts.clear();
  spec_.unit.clear();
}

AlgebraPtr FreeAlgebra::create(Spec spec, const Limits& limits) {
  if (spec.rank == 0) throw Error(Errc::size_cap, "algebra rank must be positive");
  std::size_t size = 1;
  for (std::size_t i = 0; i < spec.rank; ++i) {
    size *= spec.base->size();
    if (size > limits.max_alg)
      throw Error(Errc::size_cap, "algebra over " + spec.base->descriptor() + " of rank " +
                                      std::to_string(spec.rank) + " exceeds cap " + std::to_string(limits.max_alg));
  }
  if (spec.consts.size() != spec.rank * spec.rank * spec.rank || spec.unit.size() != spec.rank)
    throw Error(Errc::domain_mismatch, "structure constant table has the wrong shape");
  if (spec.basis_names.size() != spec.rank) {
    spec.basis_names.clear();
    for (std::size_t i = 0; i < spec.rank; ++i) spec.basis_names.push_back("e" + std::to_string(i));
  }
  auto out = AlgebraPtr(new FreeAlgebra(std::move(spec), size));
  out->check_axioms();
  return out;
}

void FreeAlgebra::check_axioms() const {
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t k = 0; k < rank_; ++k)
        if (constant(i, j, k) != constant(j, i, k))
          throw std::logic_error("structure constants are not commutative");
  for (std::size_t i = 0; i < rank_; ++i) {
    const auto ei = basis(i);
    if (multiply(unit_, ei) != ei) throw std::logic_error("unit law fails for basis element " + std::to_string(i));
    for (std::size_t j = 0; j < rank_; ++j) {
      const auto eij = multiply(ei, basis(j));
      for (std::size_t k = 0; k < rank_; ++k) {
        const auto ek = basis(k);
        if (multiply(eij, ek) != multiply(ei, multiply(basis(j), ek)))
          throw std::logic_error("structure constants are not associative");
      }
    }
  }
}

std::vector<Elem> FreeAlgebra::basis(std::size_t i) const {
  std::vector<Elem> v(rank_, base_->zero());
  v[i] = base_->one();
  return v;
}

std::vector<Elem> FreeAlgebra::embed(Elem r) const { return scale(r, unit_); }

std::size_t FreeAlgebra::encode(std::span<const Elem> coords) const {
  std::size_t idx = 0;
  const std::size_t n = base_->size();
  for (std::size_t i = rank_; i-- > 0;) idx = idx * n + coords[i];
  return idx;
}

std::vector<Elem> FreeAlgebra::decode(std::size_t index) const {
  std::vector<Elem> out(rank_);
  decode_into(index, out);
  return out;
}

void FreeAlgebra::decode_into(std::size_t index, std::span<Elem> out) const {
  const std::size_t n = base_->size();
  for (std::size_t i = 0; i < rank_; ++i) {
    out[i] = static_cast<Elem>(index % n);
    index /= n;
  }
}

std::vector<Elem> FreeAlgebra::add(std::span<const Elem> a, std::span<const Elem> b) const {
  std::vector<Elem> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) out[i] = base_->add(a[i], b[i]);
  return out;
}

std::vector<Elem> FreeAlgebra::neg(std::span<const Elem> a) const {
  std::vector<Elem> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) out[i] = base_->neg(a[i]);
  return out;
}

std::vector<Elem> FreeAlgebra::scale(Elem r, std::span<const Elem> a) const {
  std::vector<Elem> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) out[i] = base_->mul(r, a[i]);
  return out;
}

std::vector<Elem> FreeAlgebra::multiply(std::span<const Elem> a, std::span<const Elem> b) const {
  const FiniteRing& r = *base_;
  std::vector<Elem> out(rank_, r.zero());
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == r.zero()) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] == r.zero()) continue;
      const Elem ab = r.mul(a[i], b[j]);
      for (std::size_t k = 0; k < rank_; ++k) out[k] = r.add(out[k], r.mul(ab, constant(i, j, k)));
    }
  }
  return out;
}

bool FreeAlgebra::is_zero(std::span<const Elem> a) const {
  for (Elem c : a)
    if (c != base_->zero()) return false;
  return true;
}

std::vector<Elem> FreeAlgebra::multiplication_matrix(std::span<const Elem> f) const {
  const FiniteRing& r = *base_;
  std::vector<Elem> m(rank_ * rank_, r.zero());
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t i = 0; i < rank_; ++i) {
      if (f[i] == r.zero()) continue;
      for (std::size_t k = 0; k < rank_; ++k)
        m[k * rank_ + j] = r.add(m[k * rank_ + j], r.mul(f[i], constant(i, j, k)));
    }
  return m;
}

std::string FreeAlgebra::element_name(std::span<const Elem> coords) const {
  const FiniteRing& r = *base_;
  std::string out;
  for (std::size_t i = 0; i < rank_; ++i) {
    const Elem c = coords[i];
    if (c == r.zero()) continue;
    const std::string& b = spec_.basis_names[i];
    std::string term;
    if (b == "1")
      term = r.name(c);
    else if (c == r.one())
      term = b;
    else
      term = as_factor(r.name(c)) + "*" + b;
    out += out.empty() ? term : "+" + term;
  }
  return out.empty() ? r.name(r.zero()) : out;
}

AlgebraPtr FreeAlgebra::change_base(const RingMap& m, const Limits& limits) const {
  if (m.source != base_) throw Error(Errc::domain_mismatch, "change_base: map does not start at the base ring");
  Spec s = spec_;
  s.base = m.target;
  s.consts.resize(consts_.size());
  for (std::size_t i = 0; i < consts_.size(); ++i) s.consts[i] = m(consts_[i]);
  s.unit.resize(rank_);
  for (std::size_t i = 0; i < rank_; ++i) s.unit[i] = m(unit_[i]);
  s.quad_param = m(spec_.quad_param);
  return create(std::move(s), limits);
}

bool FreeAlgebra::same_structure(const FreeAlgebra& other) const {
  return base_->same_tables(*other.base_) && rank_ == other.rank_ && consts_ == other.consts_ &&
         unit_ == other.unit_;
}

namespace {

FreeAlgebra::Spec start_spec(const RingPtr& base, std::size_t rank, Presentation kind) {
  FreeAlgebra::Spec s;
  s.base = base;
  s.rank = rank;
  s.kind = kind;
  s.consts.assign(rank * rank * rank, base->zero());
  s.unit.assign(rank, base->zero());
  s.unit[0] = base->one();
  return s;
}

void set_const(FreeAlgebra::Spec& s, std::size_t i, std::size_t j, std::size_t k, Elem v) {
  s.consts[(i * s.rank + j) * s.rank + k] = v;
}

}  // namespace

AlgebraPtr alg_identity(const RingPtr& base, const Limits& limits) {
  auto s = start_spec(base, 1, Presentation::identity);
  set_const(s, 0, 0, 0, base->one());
  s.basis_names = {"1"};
  return FreeAlgebra::create(std::move(s), limits);
}

AlgebraPtr alg_truncated(const RingPtr& base, std::size_t d, const Limits& limits) {
  if (d == 0) throw Error(Errc::invalid_modulus, "truncation depth must be at least 1");
  auto s = start_spec(base, d, Presentation::truncated);
  s.depth = d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; i + j < d; ++j) set_const(s, i, j, i + j, base->one());
  s.generator_symbol = base->generator() ? "y" : "x";
  if (d > 1) s.generator_basis = 1;
  for (std::size_t i = 0; i < d; ++i) s.basis_names.push_back(power_name(s.generator_symbol, i));
  return FreeAlgebra::create(std::move(s), limits);
}

AlgebraPtr alg_quadratic(const RingPtr& base, Elem a, const Limits& limits) {
  if (a >= base->size()) throw Error(Errc::domain_mismatch, "quadratic parameter outside the base ring");
  auto s = start_spec(base, 2, Presentation::quadratic);
  s.quad_param = a;
  set_const(s, 0, 0, 0, base->one());
  set_const(s, 0, 1, 1, base->one());
  set_const(s, 1, 0, 1, base->one());
  set_const(s, 1, 1, 0, a);
  s.generator_symbol = "y";
  s.generator_basis = 1;
  s.basis_names = {"1", "y"};
  return FreeAlgebra::create(std::move(s), limits);
}

AlgebraPtr alg_monoid(const RingPtr& base, const MonoidTable& m, const Limits& limits) {
  m.validate();
  auto s = start_spec(base, m.size, Presentation::monoid);
  s.unit.assign(m.size, base->zero());
  s.unit[m.identity] = base->one();
  for (std::size_t u = 0; u < m.size; ++u)
    for (std::size_t v = 0; v < m.size; ++v) set_const(s, u, v, m.apply(u, v), base->one());
  for (std::size_t u = 0; u < m.size; ++u)
    s.basis_names.push_back(u == m.identity ? "1" : "e" + std::to_string(u));
  s.monoid = m;
  return FreeAlgebra::create(std::move(s), limits);
}

AlgebraPtr alg_group(const RingPtr& base, std::size_t order, const Limits& limits) {
  const MonoidTable m = MonoidTable::cyclic_group(order);
  auto s = start_spec(base, order, Presentation::group);
  s.group_order = order;
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = 0; v < order; ++v) set_const(s, u, v, m.apply(u, v), base->one());
  s.generator_symbol = "t";
  if (order > 1) s.generator_basis = 1;
  for (std::size_t u = 0; u < order; ++u) s.basis_names.push_back(power_name("t", u));
  return FreeAlgebra::create(std::move(s), limits);
}

AlgebraElement alg_arith(const AlgebraElement& f, const AlgebraElement& g, AlgOp op) {
  require_same_algebra(f, g);
  const FreeAlgebra& s = *f.algebra;
  switch (op) {
    case AlgOp::add: return {f.algebra, s.add(f.coords, g.coords)};
    case AlgOp::mul: return {f.algebra, s.multiply(f.coords, g.coords)};
    case AlgOp::neg: return {f.algebra, s.neg(f.coords)};
  }
  return f;
}

bool alg_equal(const AlgebraElement& f, const AlgebraElement& g) {
  require_same_algebra(f, g);
  return f.coords == g.coords;
}

Ideal content(const FreeAlgebra& s, std::span<const Elem> coords) {
  return ideal_generate(s.base(), coords);
}

Ideal content(const AlgebraElement& f) { return content(*f.algebra, f.coords); }

Ideal content_oracle(const AlgebraElement& f, const IdealLattice& lattice) {
  const FreeAlgebra& s = *f.algebra;
  if (lattice.ring() != s.base()) throw Error(Errc::domain_mismatch, "content_oracle: lattice of another ring");
  ElementSet meet(s.base()->size());
  meet.fill();
  for (const Ideal& i : lattice.ideals()) {
    // f in IS iff every coordinate lies in I, S being free on the basis.
    bool in_is = true;
    for (Elem c : f.coords)
      if (!i.contains(c)) {
        in_is = false;
        break;
      }
    if (in_is) meet &= i.members();
  }
  Ideal out = Ideal::from_members(s.base(), std::move(meet));
  for (Elem c : f.coords)
    if (!out.contains(c)) throw std::logic_error("content_oracle: f is not in c(f)S");
  return out;
}

Ideal content_oracle(const AlgebraElement& f, const Limits& limits) {
  return content_oracle(f, IdealLattice(f.algebra->base(), limits));
}

std::vector<Elem> AlgebraMap::apply(std::span<const Elem> coords) const {
  std::vector<Elem> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = base(coords[i]);
  return out;
}

AlgebraElement AlgebraMap::operator()(const AlgebraElement& f) const {
  if (f.algebra != source) throw Error(Errc::domain_mismatch, "algebra map applied to a foreign element");
  return {target, apply(f.coords)};
}

std::vector<Elem> AlgebraMap::lift(std::span<const Elem> coords) const {
  const auto sec = base.section();
  std::vector<Elem> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = sec[coords[i]];
  return out;
}

AlgebraMap base_change(const AlgebraPtr& s, const Ideal& i, const Limits& limits) {
  if (i.ring() != s->base()) throw Error(Errc::domain_mismatch, "base_change: ideal is not in the base ring");
  auto [ring, map] = make_quotient(s->base(), i);
  auto target = s->change_base(map, limits);
  return AlgebraMap{s, std::move(target), std::move(map)};
}

AlgebraMap localize_algebra(const AlgebraPtr& s, const SaturatedMultSet& w, const Limits& limits) {
  if (w.ring() != s->base()) throw Error(Errc::domain_mismatch, "localize_algebra: multiplicative set over another ring");
  auto [ring, map] = localize(s->base(), w);
  auto target = s->change_base(map, limits);
  return AlgebraMap{s, std::move(target), std::move(map)};
}

}  // namespace contentlab
