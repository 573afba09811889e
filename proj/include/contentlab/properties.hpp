#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "contentlab/algebra.hpp"
#include "contentlab/ideals.hpp"

namespace contentlab {

enum class Property {
  ohm_rush,
  mccoy,
  weak_content_radical,
  weak_content_primes,
  content_algebra,
  semicontent,
  residually_mccoy,
  property_a,
  fidel_a,
};

const char* property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);

/// Counterexample data. Elements are coordinates in the algebra that was
/// checked (lifted from S/IS for residual checks).
struct Witness {
  std::optional<std::vector<Elem>> f, g;
  std::optional<Ideal> ideal;  // residual ideal I, prime p, or an ideal of the base
  std::string ideal_label = "I";
  std::vector<Ideal> primes;   // the set T defining W for semicontent
  bool n_max_exhausted = false;
  std::string note;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::uint64_t checked_count = 0;
};

std::string describe_witness(const FreeAlgebra& s, const Witness& w);

Verdict is_mccoy(const AlgebraPtr& s, const Limits& limits = {});
/// c(fg) and c(f)c(g) have the same radical for all f, g.
Verdict is_weak_content_radical(const AlgebraPtr& s, const Limits& limits = {});
/// For every prime p, pS = S or S/pS has no nonzero zero-divisors.
Verdict is_weak_content_primes(const AlgebraPtr& s, const Limits& limits = {});

struct DedekindMertensSearch {
  std::optional<unsigned> least_n;  // least n with c(f)^{n+1}c(g) = c(f)^n c(fg), if any
};
/// Exact search; terminates because the pair of ideal sequences is
/// eventually periodic.
DedekindMertensSearch dedekind_mertens_search(const AlgebraElement& f, const AlgebraElement& g);
std::optional<unsigned> dedekind_mertens_number(const AlgebraElement& f, const AlgebraElement& g,
                                                unsigned n_max);

/// Holds iff every pair has a Dedekind-Mertens number <= n_max. A failing
/// witness is marked n_max_exhausted when a larger number exists.
Verdict is_content_algebra(const AlgebraPtr& s, unsigned n_max = 8, const Limits& limits = {});
Verdict is_semicontent(const AlgebraPtr& s, const Limits& limits = {});
Verdict is_residually_mccoy(const AlgebraPtr& s, IdealFamily family, const Limits& limits = {});

Verdict has_property_A(const RingPtr& r, const Limits& limits = {});
Verdict has_fidel_A(const RingPtr& r, const Limits& limits = {});

struct OracleSweep {
  std::size_t full_sweep_max = 1024;  // sweep every element up to this |S|
  std::size_t sample = 1000;          // otherwise this many elements
  unsigned seed = 0;                  // 0: the first elements in canonical order
};
/// content(f) == content_oracle(f) on the selected elements.
Verdict check_ohm_rush(const AlgebraPtr& s, const OracleSweep& sweep = {}, const Limits& limits = {});

/// Re-checks a failing verdict's witness against the raw definition. True
/// for holding verdicts.
bool revalidate(const AlgebraPtr& s, Property p, const Verdict& v, unsigned n_max = 8,
                const Limits& limits = {});
bool revalidate(const RingPtr& r, Property p, const Verdict& v, const Limits& limits = {});

/// Runs several checkers on one algebra, sharing the ideal lattice and the
/// scan of content triples (c(f), c(g), c(fg)) between them. Not thread-safe.
class Analyzer {
 public:
  Analyzer(AlgebraPtr s, const Limits& limits = {}, unsigned n_max = 8);
  ~Analyzer();

  Verdict mccoy();
  Verdict weak_content_radical();
  Verdict weak_content_primes();
  Verdict content_algebra();
  Verdict semicontent();
  Verdict residually_mccoy(IdealFamily family);
  Verdict ohm_rush(const OracleSweep& sweep);

  const IdealLattice& lattice();
  const AlgebraPtr& algebra() const { return s_; }

 private:
  struct Triples;
  const Triples& triples();

  AlgebraPtr s_;
  Limits limits_;
  unsigned n_max_;
  std::unique_ptr<IdealLattice> lattice_;
  std::unique_ptr<Triples> triples_;
};

}  // namespace contentlab
