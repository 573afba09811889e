#include "contentlab/ideals.hpp"

#include <algorithm>

namespace contentlab {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (a != b) throw Error(Errc::domain_mismatch, std::string(what) + ": ideals live in different rings");
}

// members + R*g, as the union of the cosets members + r*g.
void absorb_generator(const FiniteRing& r, ElementSet& members, Elem g) {
  std::vector<std::size_t> base = members.members();
  for (Elem s = 0; s < r.size(); ++s) {
    const Elem p = r.mul(s, g);
    if (members.test(p)) continue;
    for (std::size_t m : base) members.set(r.add(static_cast<Elem>(m), p));
  }
}

ElementSet zero_set(const FiniteRing& r) {
  ElementSet s(r.size());
  s.set(r.zero());
  return s;
}

}  // namespace

Ideal Ideal::zero(const RingPtr& ring) { return Ideal(ring, zero_set(*ring), {}); }

Ideal Ideal::unit(const RingPtr& ring) {
  ElementSet all(ring->size());
  all.fill();
  return Ideal(ring, std::move(all), {ring->one()});
}

Ideal Ideal::from_members(const RingPtr& ring, ElementSet members) {
  Ideal out(ring, std::move(members), {});
  out.generators_ = out.canonical_generators();
  return out;
}

std::vector<Elem> Ideal::canonical_generators() const {
  std::vector<Elem> gens;
  ElementSet cur = zero_set(*ring_);
  members_.for_each([&](std::size_t a) {
    if (cur.test(a)) return;
    gens.push_back(static_cast<Elem>(a));
    absorb_generator(*ring_, cur, static_cast<Elem>(a));
  });
  return gens;
}

bool Ideal::verify_closure() const {
  const FiniteRing& r = *ring_;
  if (!contains(r.zero())) return false;
  const auto list = members_.members();
  for (std::size_t a : list) {
    for (std::size_t b : list)
      if (!contains(r.add(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
    for (Elem s = 0; s < r.size(); ++s)
      if (!contains(r.mul(s, static_cast<Elem>(a)))) return false;
  }
  return true;
}

Ideal ideal_generate(const RingPtr& ring, std::span<const Elem> gens) {
  ElementSet members = zero_set(*ring);
  std::vector<Elem> kept;
  for (Elem g : gens) {
    if (g >= ring->size()) throw Error(Errc::domain_mismatch, "generator outside the ring");
    if (members.test(g)) continue;
    kept.push_back(g);
    absorb_generator(*ring, members, g);
  }
  return Ideal(ring, std::move(members), std::move(kept));
}

Ideal ideal_combine(const Ideal& i, const Ideal& j, IdealOp op) {
  require_same_ring(i.ring(), j.ring(), "ideal_combine");
  const RingPtr& ring = i.ring();
  const FiniteRing& r = *ring;
  switch (op) {
    case IdealOp::sum: {
      std::vector<Elem> gens = i.generators();
      gens.insert(gens.end(), j.generators().begin(), j.generators().end());
      return ideal_generate(ring, gens);
    }
    case IdealOp::product: {
      std::vector<Elem> gens;
      for (Elem a : i.generators())
        for (Elem b : j.generators()) gens.push_back(r.mul(a, b));
      return ideal_generate(ring, gens);
    }
    case IdealOp::intersection:
      return Ideal::from_members(ring, i.members() & j.members());
    case IdealOp::colon: {
      ElementSet out(r.size());
      for (Elem s = 0; s < r.size(); ++s) {
        bool ok = true;
        for (Elem g : j.generators())
          if (!i.contains(r.mul(s, g))) {
            ok = false;
            break;
          }
        if (ok) out.set(s);
      }
      return Ideal::from_members(ring, std::move(out));
    }
  }
  return i;
}

Ideal ideal_power(const Ideal& i, std::size_t k) {
  Ideal out = Ideal::unit(i.ring());
  for (std::size_t n = 0; n < k; ++n) out = ideal_product(out, i);
  return out;
}

Ideal annihilator(const Ideal& i) { return ideal_colon(Ideal::zero(i.ring()), i); }

Ideal radical(const Ideal& i) {
  const FiniteRing& r = *i.ring();
  ElementSet out(r.size());
  for (Elem a = 0; a < r.size(); ++a)
    if (i.contains(r.stable_power(a))) out.set(a);
  return Ideal::from_members(i.ring(), std::move(out));
}

bool is_radical(const Ideal& i) { return radical(i) == i; }

bool is_prime(const Ideal& i) {
  if (i.is_unit()) return false;
  const FiniteRing& r = *i.ring();
  const auto outside = i.members().complement().members();
  for (std::size_t a : outside)
    for (std::size_t b : outside)
      if (i.contains(r.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
  return true;
}

bool is_maximal(const Ideal& i) {
  if (i.is_unit()) return false;
  const FiniteRing& r = *i.ring();
  const auto outside = i.members().complement().members();
  for (std::size_t a : outside) {
    bool invertible = false;
    for (Elem b = 0; b < r.size() && !invertible; ++b)
      invertible = i.contains(r.sub(r.mul(static_cast<Elem>(a), b), r.one()));
    if (!invertible) return false;
  }
  return true;
}

const char* family_name(IdealFamily f) {
  switch (f) {
    case IdealFamily::all: return "all";
    case IdealFamily::radical: return "radical";
    case IdealFamily::prime: return "prime";
  }
  return "?";
}

std::vector<Ideal> enumerate_ideals(const RingPtr& ring, IdealFamily filter, const Limits& limits) {
  IdealLattice lattice(ring, limits);
  std::vector<Ideal> out;
  switch (filter) {
    case IdealFamily::all:
      return lattice.ideals();
    case IdealFamily::radical:
      for (auto id : lattice.radicals()) out.push_back(lattice.ideal(id));
      return out;
    case IdealFamily::prime:
      for (auto id : lattice.primes()) out.push_back(lattice.ideal(id));
      return out;
  }
  return out;
}

Ideal image_ideal(const RingMap& m, const Ideal& i) {
  require_same_ring(m.source, i.ring(), "image_ideal");
  std::vector<Elem> gens;
  for (Elem g : i.generators()) gens.push_back(m(g));
  return ideal_generate(m.target, gens);
}

Ideal preimage_ideal(const RingMap& m, const Ideal& j) {
  require_same_ring(m.target, j.ring(), "preimage_ideal");
  ElementSet out(m.source->size());
  for (Elem a = 0; a < m.source->size(); ++a)
    if (j.contains(m(a))) out.set(a);
  return Ideal::from_members(m.source, std::move(out));
}

std::string to_string(const Ideal& i) {
  const auto gens = i.canonical_generators();
  if (gens.empty()) return "(" + i.ring()->name(i.ring()->zero()) + ")";
  std::string s = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) s += ",";
    s += i.ring()->name(gens[k]);
  }
  return s + ")";
}

SaturatedMultSet SaturatedMultSet::make(const RingPtr& ring, std::vector<Ideal> primes) {
  SaturatedMultSet w;
  w.ring_ = ring;
  ElementSet removed(ring->size());
  for (const Ideal& p : primes) {
    if (p.ring() != ring) throw Error(Errc::invalid_mult_set, "prime from a different ring");
    if (!is_prime(p)) throw Error(Errc::invalid_mult_set, "ideal " + to_string(p) + " is not prime");
    removed |= p.members();
  }
  w.members_ = removed.complement();
  w.primes_ = std::move(primes);
  return w;
}

IdealLattice::IdealLattice(RingPtr ring, const Limits& limits) : ring_(std::move(ring)) {
  const FiniteRing& r = *ring_;
  const std::size_t n = r.size();

  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<std::size_t> principal_raw(n);
  std::vector<std::size_t> principals;
  auto insert = [&](ElementSet s) -> std::size_t {
    auto it = seen.find(s);
    if (it != seen.end()) return it->second;
    if (found.size() >= limits.max_ideals)
      throw Error(Errc::size_cap, "ideal lattice of " + r.descriptor() + " exceeds cap " +
                                      std::to_string(limits.max_ideals));
    const std::size_t id = found.size();
    seen.emplace(s, id);
    found.push_back(std::move(s));
    return id;
  };

  for (Elem a = 0; a < n; ++a) {
    ElementSet s(n);
    for (Elem b = 0; b < n; ++b) s.set(r.mul(b, a));
    const std::size_t before = found.size();
    principal_raw[a] = insert(std::move(s));
    if (found.size() != before) principals.push_back(principal_raw[a]);
  }

  // Join-closure: every ideal is a finite sum of principal ideals.
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t p : principals) {
      if (found[p].is_subset_of(found[k])) continue;
      ElementSet s = found[k];
      const auto base = found[k].members();
      found[p].for_each([&](std::size_t q) {
        if (s.test(q)) return;
        for (std::size_t m : base) s.set(r.add(static_cast<Elem>(m), static_cast<Elem>(q)));
      });
      insert(std::move(s));
    }
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::vector<std::size_t> sizes(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) sizes[k] = found[k].count();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return lex_less(found[a], found[b]);
  });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

  ideals_.reserve(found.size());
  for (std::size_t k : order) {
    index_.emplace(found[k], ideals_.size());
    ideals_.push_back(Ideal::from_members(ring_, found[k]));
  }
  principal_.resize(n);
  for (Elem a = 0; a < n; ++a) principal_[a] = rank[principal_raw[a]];

  radical_.assign(ideals_.size(), std::nullopt);
  annihilator_.assign(ideals_.size(), std::nullopt);
  for (Id id = 0; id < ideals_.size(); ++id) {
    if (radical(id) == id) radicals_.push_back(id);
    if (is_prime(ideals_[id])) primes_.push_back(id);
  }
}

IdealLattice::Id IdealLattice::id_of(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) throw Error(Errc::domain_mismatch, "set is not an ideal of " + ring_->descriptor());
  return it->second;
}

IdealLattice::Id IdealLattice::generated(std::span<const Elem> gens) const {
  Id out = zero_id();
  for (Elem g : gens) out = sum(out, principal(g));
  return out;
}

IdealLattice::Id IdealLattice::memo(std::unordered_map<std::uint64_t, Id>& table, Id a, Id b,
                                    IdealOp op) const {
  if (a > b) std::swap(a, b);
  const std::uint64_t key = static_cast<std::uint64_t>(a) * ideals_.size() + b;
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  const Id out = id_of(ideal_combine(ideals_[a], ideals_[b], op));
  table.emplace(key, out);
  return out;
}

IdealLattice::Id IdealLattice::sum(Id a, Id b) const {
  if (a == zero_id()) return b;
  if (b == zero_id()) return a;
  return memo(sum_, a, b, IdealOp::sum);
}

IdealLattice::Id IdealLattice::product(Id a, Id b) const {
  if (a == unit_id()) return b;
  if (b == unit_id()) return a;
  return memo(product_, a, b, IdealOp::product);
}

IdealLattice::Id IdealLattice::intersection(Id a, Id b) const {
  return memo(intersection_, a, b, IdealOp::intersection);
}

IdealLattice::Id IdealLattice::radical(Id a) const {
  if (!radical_[a]) radical_[a] = id_of(contentlab::radical(ideals_[a]));
  return *radical_[a];
}

IdealLattice::Id IdealLattice::annihilator(Id a) const {
  if (!annihilator_[a]) annihilator_[a] = id_of(contentlab::annihilator(ideals_[a]));
  return *annihilator_[a];
}

}  // namespace contentlab
