#include "contentlab/properties.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "contentlab/quotient.hpp"

namespace contentlab {

namespace {

using Id = IdealLattice::Id;

Verdict fail(Witness w, std::uint64_t checked) {
  Verdict v;
  v.holds = false;
  v.witness = std::move(w);
  v.checked_count = checked;
  return v;
}

// True when some nonzero r kills every coordinate, i.e. ann(c(f)) != 0.
bool content_has_annihilator(const FiniteRing& r, std::span<const Elem> coords) {
  for (Elem s = 0; s < r.size(); ++s) {
    if (s == r.zero()) continue;
    bool kills = true;
    for (Elem c : coords)
      if (r.mul(s, c) != r.zero()) {
        kills = false;
        break;
      }
    if (kills) return true;
  }
  return false;
}

// fg = M_f * g.
void apply_matrix(const FiniteRing& r, std::size_t m, const std::vector<Elem>& mat,
                  std::span<const Elem> g, std::span<Elem> out) {
  for (std::size_t k = 0; k < m; ++k) {
    Elem acc = r.zero();
    for (std::size_t j = 0; j < m; ++j)
      if (g[j] != r.zero()) acc = r.add(acc, r.mul(mat[k * m + j], g[j]));
    out[k] = acc;
  }
}

bool all_in(const Ideal& i, std::span<const Elem> coords) {
  for (Elem c : coords)
    if (!i.contains(c)) return false;
  return true;
}

// Least pair (f, g) of nonzero elements with fg = 0, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_zero_product(const FreeAlgebra& s,
                                                                     std::uint64_t& checked) {
  const FiniteRing& r = *s.base();
  const std::size_t m = s.rank();
  std::vector<Elem> f(m), g(m), fg(m);
  for (std::size_t fi = 1; fi < s.size(); ++fi) {
    ++checked;
    s.decode_into(fi, f);
    const auto mat = s.multiplication_matrix(f);
    for (std::size_t gi = 1; gi < s.size(); ++gi) {
      s.decode_into(gi, g);
      apply_matrix(r, m, mat, g, fg);
      if (s.is_zero(fg)) return std::make_pair(fi, gi);
    }
  }
  return std::nullopt;
}

Verdict mccoy_scan(const FreeAlgebra& s) {
  const FiniteRing& r = *s.base();
  const std::size_t m = s.rank();
  std::vector<Elem> f(m), g(m), fg(m);
  std::uint64_t checked = 0;
  for (std::size_t fi = 0; fi < s.size(); ++fi) {
    ++checked;
    s.decode_into(fi, f);
    if (content_has_annihilator(r, f)) continue;
    const auto mat = s.multiplication_matrix(f);
    for (std::size_t gi = 1; gi < s.size(); ++gi) {
      s.decode_into(gi, g);
      apply_matrix(r, m, mat, g, fg);
      if (s.is_zero(fg)) {
        Witness w;
        w.f = f;
        w.g = g;
        w.note = "fg = 0, g != 0, ann(c(f)) = 0";
        return fail(std::move(w), checked);
      }
    }
  }
  Verdict v;
  v.checked_count = checked;
  return v;
}

}  // namespace

const char* property_name(Property p) {
  switch (p) {
    case Property::ohm_rush: return "ohm-rush";
    case Property::mccoy: return "mccoy";
    case Property::weak_content_radical: return "weak-content";
    case Property::weak_content_primes: return "weak-content-primes";
    case Property::content_algebra: return "content-algebra";
    case Property::semicontent: return "semicontent";
    case Property::residually_mccoy: return "residually-mccoy";
    case Property::property_a: return "property-a";
    case Property::fidel_a: return "fidel-a";
  }
  return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
  for (Property p : {Property::ohm_rush, Property::mccoy, Property::weak_content_radical,
                     Property::weak_content_primes, Property::content_algebra, Property::semicontent,
                     Property::residually_mccoy, Property::property_a, Property::fidel_a})
    if (name == property_name(p)) return p;
  if (name == "weak-content-radical") return Property::weak_content_radical;
  return std::nullopt;
}

std::string describe_witness(const FreeAlgebra& s, const Witness& w) {
  std::string out;
  auto item = [&](const std::string& text) { out += (out.empty() ? "" : ", ") + text; };
  if (!w.primes.empty()) {
    std::string t = "{";
    for (std::size_t k = 0; k < w.primes.size(); ++k) t += (k ? "," : "") + to_string(w.primes[k]);
    item("T=" + t + "}");
  }
  if (w.ideal) item(w.ideal_label + "=" + to_string(*w.ideal));
  if (w.f) item("f=" + s.element_name(*w.f));
  if (w.g) item("g=" + s.element_name(*w.g));
  if (w.n_max_exhausted) item("n_max exhausted");
  return out;
}

// ---------------------------------------------------------------------------
// Analyzer

struct Analyzer::Triples {
  struct Entry {
    Id cf, cg, cfg;
    std::size_t f, g;
  };
  std::vector<Id> content_id;  // per encoded element
  std::vector<Entry> entries;  // distinct triples in order of first occurrence
  std::uint64_t pairs = 0;
};

Analyzer::Analyzer(AlgebraPtr s, const Limits& limits, unsigned n_max)
    : s_(std::move(s)), limits_(limits), n_max_(n_max) {}

Analyzer::~Analyzer() = default;

const IdealLattice& Analyzer::lattice() {
  if (!lattice_) lattice_ = std::make_unique<IdealLattice>(s_->base(), limits_);
  return *lattice_;
}

const Analyzer::Triples& Analyzer::triples() {
  if (triples_) return *triples_;
  const IdealLattice& lat = lattice();
  const FreeAlgebra& s = *s_;
  const FiniteRing& r = *s.base();
  const std::size_t m = s.rank();
  auto t = std::make_unique<Triples>();
  t->content_id.resize(s.size());
  std::vector<Elem> f(m), g(m), fg(m);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s.decode_into(i, f);
    t->content_id[i] = lat.generated(f);
  }
  const std::uint64_t l = lat.size();
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t fi = 0; fi < s.size(); ++fi) {
    s.decode_into(fi, f);
    const auto mat = s.multiplication_matrix(f);
    const Id cf = t->content_id[fi];
    for (std::size_t gi = 0; gi < s.size(); ++gi) {
      s.decode_into(gi, g);
      apply_matrix(r, m, mat, g, fg);
      const Id cg = t->content_id[gi];
      const Id cfg = t->content_id[s.encode(fg)];
      if (seen.insert((cf * l + cg) * l + cfg).second) t->entries.push_back({cf, cg, cfg, fi, gi});
    }
  }
  t->pairs = static_cast<std::uint64_t>(s.size()) * s.size();
  triples_ = std::move(t);
  return *triples_;
}

Verdict Analyzer::mccoy() { return mccoy_scan(*s_); }

Verdict Analyzer::weak_content_radical() {
  const auto& t = triples();
  const IdealLattice& lat = lattice();
  for (const auto& e : t.entries) {
    if (lat.radical(e.cfg) != lat.radical(lat.product(e.cf, e.cg))) {
      Witness w;
      w.f = s_->decode(e.f);
      w.g = s_->decode(e.g);
      w.note = "rad c(fg) = " + to_string(lat.ideal(lat.radical(e.cfg))) + " but rad c(f)c(g) = " +
               to_string(lat.ideal(lat.radical(lat.product(e.cf, e.cg))));
      return fail(std::move(w), t.pairs);
    }
  }
  Verdict v;
  v.checked_count = t.pairs;
  return v;
}

Verdict Analyzer::weak_content_primes() {
  const IdealLattice& lat = lattice();
  std::uint64_t checked = 0;
  for (Id p : lat.primes()) {
    const Ideal& prime = lat.ideal(p);
    const AlgebraMap q = base_change(s_, prime, limits_);
    // A free algebra of positive rank over a nonzero ring: pS != S.
    auto hit = find_zero_product(*q.target, checked);
    if (hit) {
      Witness w;
      w.ideal = prime;
      w.ideal_label = "p";
      w.f = q.lift(q.target->decode(hit->first));
      w.g = q.lift(q.target->decode(hit->second));
      w.note = "pS is not prime";
      return fail(std::move(w), checked);
    }
  }
  Verdict v;
  v.checked_count = checked;
  return v;
}

namespace {

// Least n with A^{n+1}B = A^n C on lattice ids, if it exists.
std::optional<unsigned> lattice_dm(const IdealLattice& lat, Id a, Id b, Id c) {
  Id lhs = lat.product(a, b), rhs = c;
  std::unordered_set<std::uint64_t> seen;
  for (unsigned n = 0;; ++n) {
    if (lhs == rhs) return n;
    if (!seen.insert(static_cast<std::uint64_t>(lhs) * lat.size() + rhs).second) return std::nullopt;
    lhs = lat.product(a, lhs);
    rhs = lat.product(a, rhs);
  }
}

}  // namespace

Verdict Analyzer::content_algebra() {
  const auto& t = triples();
  const IdealLattice& lat = lattice();
  for (const auto& e : t.entries) {
    const auto n = lattice_dm(lat, e.cf, e.cg, e.cfg);
    if (!n || *n > n_max_) {
      Witness w;
      w.f = s_->decode(e.f);
      w.g = s_->decode(e.g);
      w.n_max_exhausted = n.has_value();
      w.note = n ? "Dedekind-Mertens number " + std::to_string(*n) + " exceeds n_max"
                 : "no n satisfies c(f)^(n+1)c(g) = c(f)^n c(fg)";
      return fail(std::move(w), t.pairs);
    }
  }
  Verdict v;
  v.checked_count = t.pairs;
  return v;
}

Verdict Analyzer::semicontent() {
  const auto& t = triples();
  const IdealLattice& lat = lattice();
  const auto& primes = lat.primes();
  if (primes.size() > 20) throw Error(Errc::size_cap, "semicontent: too many primes to enumerate multiplicative sets");
  const std::size_t nsets = std::size_t{1} << primes.size();

  struct Localized {
    std::vector<bool> meets;  // c ∩ W != ∅
    std::vector<Id> loc;      // c + I_W
  };
  std::vector<Localized> per_set(nsets);
  for (std::size_t mask = 0; mask < nsets; ++mask) {
    std::vector<Ideal> chosen;
    for (std::size_t k = 0; k < primes.size(); ++k)
      if (mask >> k & 1) chosen.push_back(lat.ideal(primes[k]));
    const auto w = SaturatedMultSet::make(s_->base(), std::move(chosen));
    const Id kernel = lat.id_of(localization_kernel(w));
    auto& ls = per_set[mask];
    ls.meets.resize(lat.size());
    ls.loc.resize(lat.size());
    for (Id j = 0; j < lat.size(); ++j) {
      ls.meets[j] = lat.ideal(j).members().intersects(w.members());
      ls.loc[j] = lat.sum(j, kernel);
    }
  }

  for (const auto& e : t.entries) {
    for (std::size_t mask = 0; mask < nsets; ++mask) {
      const auto& ls = per_set[mask];
      if (ls.meets[e.cf] && ls.loc[e.cfg] != ls.loc[e.cg]) {
        Witness w;
        for (std::size_t k = 0; k < primes.size(); ++k)
          if (mask >> k & 1) w.primes.push_back(lat.ideal(primes[k]));
        w.f = s_->decode(e.f);
        w.g = s_->decode(e.g);
        w.note = "c(f) meets W but c(fg)_W != c(g)_W";
        return fail(std::move(w), t.pairs * nsets);
      }
    }
  }
  Verdict v;
  v.checked_count = t.pairs * nsets;
  return v;
}

Verdict Analyzer::residually_mccoy(IdealFamily family) {
  const IdealLattice& lat = lattice();
  std::vector<Id> ids;
  switch (family) {
    case IdealFamily::all:
      for (Id i = 0; i < lat.size(); ++i) ids.push_back(i);
      break;
    case IdealFamily::radical: ids = lat.radicals(); break;
    case IdealFamily::prime: ids = lat.primes(); break;
  }
  std::uint64_t checked = 0;
  for (Id id : ids) {
    const Ideal& i = lat.ideal(id);
    const AlgebraMap q = base_change(s_, i, limits_);
    Verdict inner = mccoy_scan(*q.target);
    checked += inner.checked_count;
    if (!inner.holds) {
      Witness w;
      w.ideal = i;
      w.f = q.lift(*inner.witness->f);
      w.g = q.lift(*inner.witness->g);
      w.note = "R/I -> S/IS is not McCoy";
      return fail(std::move(w), checked);
    }
  }
  Verdict v;
  v.checked_count = checked;
  return v;
}

Verdict Analyzer::ohm_rush(const OracleSweep& sweep) {
  const IdealLattice& lat = lattice();
  const FreeAlgebra& s = *s_;
  std::vector<std::size_t> picks;
  if (s.size() <= sweep.full_sweep_max || s.size() <= sweep.sample) {
    picks.resize(s.size());
    std::iota(picks.begin(), picks.end(), std::size_t{0});
  } else if (sweep.seed == 0) {
    picks.resize(sweep.sample);
    std::iota(picks.begin(), picks.end(), std::size_t{0});
  } else {
    std::vector<std::size_t> all(s.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::mt19937 rng(sweep.seed);
    std::sample(all.begin(), all.end(), std::back_inserter(picks), sweep.sample, rng);
  }
  std::uint64_t checked = 0;
  for (std::size_t idx : picks) {
    ++checked;
    AlgebraElement f{s_, s.decode(idx)};
    bool ok = true;
    std::string why;
    try {
      ok = content(f) == content_oracle(f, lat);
      if (!ok) why = "content differs from the intersection of all I with f in IS";
    } catch (const std::logic_error& e) {
      ok = false;
      why = e.what();
    }
    if (!ok) {
      Witness w;
      w.f = f.coords;
      w.note = why;
      return fail(std::move(w), checked);
    }
  }
  Verdict v;
  v.checked_count = checked;
  return v;
}

// ---------------------------------------------------------------------------
// Free-function entry points

Verdict is_mccoy(const AlgebraPtr& s, const Limits& limits) { return Analyzer(s, limits).mccoy(); }
Verdict is_weak_content_radical(const AlgebraPtr& s, const Limits& limits) {
  return Analyzer(s, limits).weak_content_radical();
}
Verdict is_weak_content_primes(const AlgebraPtr& s, const Limits& limits) {
  return Analyzer(s, limits).weak_content_primes();
}
Verdict is_content_algebra(const AlgebraPtr& s, unsigned n_max, const Limits& limits) {
  return Analyzer(s, limits, n_max).content_algebra();
}
Verdict is_semicontent(const AlgebraPtr& s, const Limits& limits) { return Analyzer(s, limits).semicontent(); }
Verdict is_residually_mccoy(const AlgebraPtr& s, IdealFamily family, const Limits& limits) {
  return Analyzer(s, limits).residually_mccoy(family);
}
Verdict check_ohm_rush(const AlgebraPtr& s, const OracleSweep& sweep, const Limits& limits) {
  return Analyzer(s, limits).ohm_rush(sweep);
}

DedekindMertensSearch dedekind_mertens_search(const AlgebraElement& f, const AlgebraElement& g) {
  const Ideal a = content(f);
  const Ideal b = content(g);
  const Ideal c = content(alg_arith(f, g, AlgOp::mul));
  Ideal lhs = ideal_product(a, b), rhs = c;
  std::vector<std::pair<ElementSet, ElementSet>> seen;
  for (unsigned n = 0;; ++n) {
    if (lhs == rhs) return {n};
    for (const auto& [l, r] : seen)
      if (l == lhs.members() && r == rhs.members()) return {std::nullopt};
    seen.emplace_back(lhs.members(), rhs.members());
    lhs = ideal_product(a, lhs);
    rhs = ideal_product(a, rhs);
  }
}

std::optional<unsigned> dedekind_mertens_number(const AlgebraElement& f, const AlgebraElement& g,
                                                unsigned n_max) {
  const auto s = dedekind_mertens_search(f, g);
  if (s.least_n && *s.least_n <= n_max) return s.least_n;
  return std::nullopt;
}

Verdict has_property_A(const RingPtr& r, const Limits& limits) {
  const IdealLattice lat(r, limits);
  std::uint64_t checked = 0;
  for (const Ideal& j : lat.ideals()) {
    if (!j.members().is_subset_of(r->zero_divisors())) continue;
    ++checked;
    if (annihilator(j).is_zero()) {
      Witness w;
      w.ideal = j;
      w.ideal_label = "J";
      w.note = "ideal of zero-divisors with zero annihilator";
      return fail(std::move(w), checked);
    }
  }
  Verdict v;
  v.checked_count = checked;
  return v;
}

Verdict has_fidel_A(const RingPtr& r, const Limits& limits) {
  const IdealLattice lat(r, limits);
  std::uint64_t checked = 0;
  for (const Ideal& i : lat.ideals()) {
    auto [quotient, map] = make_quotient(r, i);
    Verdict inner = has_property_A(quotient, limits);
    checked += inner.checked_count;
    if (!inner.holds) {
      Witness w;
      w.ideal = i;
      w.note = "R/I fails property (A) at " + to_string(*inner.witness->ideal);
      return fail(std::move(w), checked);
    }
  }
  Verdict v;
  v.checked_count = checked;
  return v;
}

// ---------------------------------------------------------------------------
// Revalidation against the raw definitions

bool revalidate(const AlgebraPtr& sp, Property p, const Verdict& v, unsigned n_max, const Limits& limits) {
  if (v.holds) return true;
  if (!v.witness) return false;
  const Witness& w = *v.witness;
  const FreeAlgebra& s = *sp;
  const RingPtr& base = s.base();
  auto elem = [&](const std::optional<std::vector<Elem>>& c) { return AlgebraElement{sp, *c}; };
  try {
    switch (p) {
      case Property::ohm_rush: {
        if (!w.f) return false;
        try {
          return !(content(elem(w.f)) == content_oracle(elem(w.f), limits));
        } catch (const std::logic_error&) {
          return true;
        }
      }
      case Property::mccoy: {
        if (!w.f || !w.g) return false;
        const auto fg = s.multiply(*w.f, *w.g);
        return s.is_zero(fg) && !s.is_zero(*w.g) && annihilator(content(s, *w.f)).is_zero();
      }
      case Property::weak_content_radical: {
        if (!w.f || !w.g) return false;
        const Ideal cfg = content(s, s.multiply(*w.f, *w.g));
        const Ideal prod = ideal_product(content(s, *w.f), content(s, *w.g));
        return !(radical(cfg) == radical(prod));
      }
      case Property::weak_content_primes: {
        if (!w.f || !w.g || !w.ideal) return false;
        const Ideal& prime = *w.ideal;
        return is_prime(prime) && !all_in(prime, *w.f) && !all_in(prime, *w.g) &&
               all_in(prime, s.multiply(*w.f, *w.g));
      }
      case Property::content_algebra: {
        if (!w.f || !w.g) return false;
        const auto search = dedekind_mertens_search(elem(w.f), elem(w.g));
        if (w.n_max_exhausted) return search.least_n && *search.least_n > n_max;
        return !search.least_n;
      }
      case Property::semicontent: {
        if (!w.f || !w.g) return false;
        const auto mult = SaturatedMultSet::make(base, w.primes);
        if (!content(s, *w.f).members().intersects(mult.members())) return false;
        auto [loc, map] = localize(base, mult);
        const Ideal cfg = image_ideal(map, content(s, s.multiply(*w.f, *w.g)));
        const Ideal cg = image_ideal(map, content(s, *w.g));
        return !(cfg == cg);
      }
      case Property::residually_mccoy: {
        if (!w.f || !w.g || !w.ideal) return false;
        const Ideal& i = *w.ideal;
        return all_in(i, s.multiply(*w.f, *w.g)) && !all_in(i, *w.g) &&
               ideal_colon(i, content(s, *w.f)) == i;
      }
      case Property::property_a:
      case Property::fidel_a:
        return revalidate(base, p, v, limits);
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

bool revalidate(const RingPtr& r, Property p, const Verdict& v, const Limits& limits) {
  if (v.holds) return true;
  if (!v.witness || !v.witness->ideal) return false;
  const Ideal& j = *v.witness->ideal;
  if (j.ring() != r) return false;
  switch (p) {
    case Property::property_a:
      return j.members().is_subset_of(r->zero_divisors()) && annihilator(j).is_zero();
    case Property::fidel_a: {
      auto [quotient, map] = make_quotient(r, j);
      return !has_property_A(quotient, limits).holds;
    }
    default:
      return false;
  }
}

}  // namespace contentlab
