#include "contentlab/quotient.hpp"

#include <stdexcept>

namespace contentlab {

std::pair<RingPtr, RingMap> make_quotient(const RingPtr& ring, const Ideal& i) {
  if (i.ring() != ring) throw Error(Errc::domain_mismatch, "make_quotient: ideal is not an ideal of " + ring->descriptor());
  const FiniteRing& r = *ring;
  const std::size_t n = r.size();
  const Elem unset = static_cast<Elem>(n);
  const auto members = i.members().members();

  std::vector<Elem> cls(n, unset);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (cls[a] != unset) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (std::size_t m : members) cls[r.add(a, static_cast<Elem>(m))] = c;
  }

  const std::size_t q = reps.size();
  FiniteRing::Spec s;
  s.size = q;
  s.add.resize(q * q);
  s.mul.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      s.add[a * q + b] = static_cast<std::uint16_t>(cls[r.add(reps[a], reps[b])]);
      s.mul[a * q + b] = static_cast<std::uint16_t>(cls[r.mul(reps[a], reps[b])]);
    }
  s.zero = cls[r.zero()];
  s.one = cls[r.one()];
  if (r.generator()) s.generator = cls[*r.generator()];
  for (const auto& [name, e] : r.symbols()) s.symbols.emplace_back(name, cls[e]);
  for (Elem rep : reps) s.names.push_back(r.name(rep));
  s.descriptor = "quot(" + r.descriptor() + "; ";
  const auto gens = i.canonical_generators();
  if (gens.empty()) s.descriptor += r.name(r.zero());
  for (std::size_t k = 0; k < gens.size(); ++k) s.descriptor += (k ? "," : "") + r.name(gens[k]);
  s.descriptor += ")";
  s.cover = ring;
  s.cover_image = cls;

  auto target = FiniteRing::create(std::move(s));
  return {target, RingMap{ring, target, std::move(cls)}};
}

Ideal localization_kernel(const SaturatedMultSet& w) {
  const FiniteRing& r = *w.ring();
  ElementSet kernel(r.size());
  const auto ws = w.members().members();
  for (Elem a = 0; a < r.size(); ++a)
    for (std::size_t u : ws)
      if (r.mul(static_cast<Elem>(u), a) == r.zero()) {
        kernel.set(a);
        break;
      }
  return Ideal::from_members(w.ring(), std::move(kernel));
}

std::pair<RingPtr, RingMap> localize(const RingPtr& ring, const SaturatedMultSet& w) {
  if (w.ring() != ring) throw Error(Errc::domain_mismatch, "localize: multiplicative set from another ring");
  auto result = make_quotient(ring, localization_kernel(w));
  const RingPtr& target = result.first;
  const RingMap& map = result.second;
  w.members().for_each([&](std::size_t u) {
    if (!target->is_unit(map(static_cast<Elem>(u))))
      throw std::logic_error("localize: image of W is not a unit");
  });
  return result;
}

}  // namespace contentlab
