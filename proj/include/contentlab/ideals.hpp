#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "contentlab/element_set.hpp"
#include "contentlab/finring.hpp"

namespace contentlab {

/// An ideal of a finite ring: membership bitset plus a generating list.
class Ideal {
 public:
  Ideal() = default;

  static Ideal zero(const RingPtr& ring);
  static Ideal unit(const RingPtr& ring);
  /// Wraps a member set already known to be an ideal; generators are
  /// recomputed canonically.
  static Ideal from_members(const RingPtr& ring, ElementSet members);

  const RingPtr& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  /// Greedy generators: each is the least member outside the ideal generated
  /// by the previous ones.
  std::vector<Elem> canonical_generators() const;

  bool contains(Elem a) const { return members_.test(a); }
  std::size_t size() const { return members_.count(); }
  bool is_zero() const { return size() == 1; }
  bool is_unit() const { return ring_ && contains(ring_->one()); }
  bool contains(const Ideal& other) const { return other.members_.is_subset_of(members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

  /// Re-checks closure under addition and absorption.
  bool verify_closure() const;

 private:
  friend Ideal ideal_generate(const RingPtr&, std::span<const Elem>);
  Ideal(RingPtr ring, ElementSet members, std::vector<Elem> gens)
      : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(gens)) {}

  RingPtr ring_;
  ElementSet members_;
  std::vector<Elem> generators_;
};

Ideal ideal_generate(const RingPtr& ring, std::span<const Elem> gens);
inline Ideal ideal_generate(const RingPtr& ring, std::initializer_list<Elem> gens) {
  return ideal_generate(ring, std::span<const Elem>(gens.begin(), gens.size()));
}

enum class IdealOp { sum, product, intersection, colon };
Ideal ideal_combine(const Ideal& i, const Ideal& j, IdealOp op);
inline Ideal ideal_sum(const Ideal& i, const Ideal& j) { return ideal_combine(i, j, IdealOp::sum); }
inline Ideal ideal_product(const Ideal& i, const Ideal& j) { return ideal_combine(i, j, IdealOp::product); }
inline Ideal ideal_intersection(const Ideal& i, const Ideal& j) { return ideal_combine(i, j, IdealOp::intersection); }
inline Ideal ideal_colon(const Ideal& i, const Ideal& j) { return ideal_combine(i, j, IdealOp::colon); }
Ideal ideal_power(const Ideal& i, std::size_t k);

Ideal annihilator(const Ideal& i);
Ideal radical(const Ideal& i);
bool is_prime(const Ideal& i);
bool is_radical(const Ideal& i);
bool is_maximal(const Ideal& i);

enum class IdealFamily { all, radical, prime };
const char* family_name(IdealFamily f);

/// All ideals of the ring matching the filter, in canonical order (by size,
/// then by sorted member list).
std::vector<Ideal> enumerate_ideals(const RingPtr& ring, IdealFamily filter,
                                    const Limits& limits = {});

Ideal image_ideal(const RingMap& m, const Ideal& i);
Ideal preimage_ideal(const RingMap& m, const Ideal& j);

/// Prints as a canonical generator list, e.g. "(2)", "(x^3)", "(0)".
std::string to_string(const Ideal& i);

/// W = R minus the union of the listed primes.
class SaturatedMultSet {
 public:
  static SaturatedMultSet make(const RingPtr& ring, std::vector<Ideal> primes);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Ideal>& primes() const { return primes_; }
  const ElementSet& members() const { return members_; }
  bool contains(Elem a) const { return members_.test(a); }

 private:
  RingPtr ring_;
  std::vector<Ideal> primes_;
  ElementSet members_;
};

/// The full ideal lattice of a ring with memoized operations on ideal ids.
/// Memo tables are filled lazily, so one lattice must not be shared between
/// threads.
class IdealLattice {
 public:
  using Id = std::size_t;

  explicit IdealLattice(RingPtr ring, const Limits& limits = {});

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& ideal(Id id) const { return ideals_[id]; }
  const std::vector<Ideal>& ideals() const { return ideals_; }

  Id id_of(const ElementSet& members) const;
  Id id_of(const Ideal& i) const { return id_of(i.members()); }

  Id zero_id() const { return 0; }
  Id unit_id() const { return ideals_.size() - 1; }
  Id principal(Elem a) const { return principal_[a]; }
  Id generated(std::span<const Elem> gens) const;

  Id sum(Id a, Id b) const;
  Id product(Id a, Id b) const;
  Id intersection(Id a, Id b) const;
  Id radical(Id a) const;
  Id annihilator(Id a) const;
  bool contains(Id big, Id small) const { return ideals_[small].members().is_subset_of(ideals_[big].members()); }

  const std::vector<Id>& primes() const { return primes_; }
  const std::vector<Id>& radicals() const { return radicals_; }

 private:
  Id memo(std::unordered_map<std::uint64_t, Id>& table, Id a, Id b, IdealOp op) const;

  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, Id, ElementSetHash> index_;
  std::vector<Id> principal_;
  std::vector<Id> primes_, radicals_;
  mutable std::unordered_map<std::uint64_t, Id> sum_, product_, intersection_;
  mutable std::vector<std::optional<Id>> radical_, annihilator_;
};

}  // namespace contentlab
