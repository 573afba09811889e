#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "contentlab/element_set.hpp"
#include "contentlab/error.hpp"

namespace contentlab {

/// Index of an element inside its ring's canonical order.
using Elem = std::uint32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingElement {
  RingPtr ring;
  Elem index = 0;
};

/// A finite commutative ring given by explicit addition and multiplication
/// tables. Instances are immutable and shared through RingPtr.
class FiniteRing {
 public:
  struct Spec {
    std::size_t size = 0;
    std::vector<std::uint16_t> add, mul;
    Elem zero = 0, one = 0;
    std::string descriptor;
    std::vector<std::string> names;
    std::optional<Elem> generator;
    // Named elements usable in expressions: the truncation variables, the
    // innermost first ("x", then "z", "w", ...).
    std::vector<std::pair<std::string, Elem>> symbols;
    // Set for prod(left,right): element index = a * right.size() + b.
    RingPtr left, right;
    // Set for quotient rings: the ring this one is a quotient of, with the
    // projection table.
    RingPtr cover;
    std::vector<Elem> cover_image;
  };

  static RingPtr create(Spec spec);

  std::size_t size() const { return size_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// The image of the integer k under Z -> R.
  Elem from_int(long long k) const;

  /// An element of the eventual cycle of a, a^2, a^3, ...; r lies in an
  /// ideal's radical iff its stable power does.
  Elem stable_power(Elem a) const { return stable_power_[a]; }

  bool is_unit(Elem a) const { return units_.test(a); }
  bool is_zero_divisor(Elem a) const { return zero_divisors_.test(a); }
  const ElementSet& units() const { return units_; }
  const ElementSet& zero_divisors() const { return zero_divisors_; }

  const std::string& descriptor() const { return descriptor_; }
  const std::string& name(Elem a) const { return names_[a]; }
  /// The variable of the outermost truncation, if any.
  std::optional<Elem> generator() const { return generator_; }
  const std::vector<std::pair<std::string, Elem>>& symbols() const { return symbols_; }
  std::optional<Elem> symbol(const std::string& name) const;

  bool is_product() const { return left_ != nullptr; }
  const RingPtr& left() const { return left_; }
  const RingPtr& right() const { return right_; }
  Elem pair(Elem a, Elem b) const { return static_cast<Elem>(a * right_->size() + b); }

  const RingPtr& cover() const { return cover_; }
  Elem project_from_cover(Elem a) const { return cover_image_[a]; }

  bool same_tables(const FiniteRing& other) const;

 private:
  explicit FiniteRing(Spec spec);

  std::size_t size_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<Elem> neg_, stable_power_;
  Elem zero_, one_;
  ElementSet units_, zero_divisors_;
  std::string descriptor_;
  std::vector<std::string> names_;
  std::optional<Elem> generator_;
  std::vector<std::pair<std::string, Elem>> symbols_;
  RingPtr left_, right_, cover_;
  std::vector<Elem> cover_image_;
};

/// A ring homomorphism given by its table source-index -> target-index.
struct RingMap {
  RingPtr source, target;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a]; }
  /// For each target element, the least source index mapping onto it (or
  /// target size when there is none).
  std::vector<Elem> section() const;
  bool is_homomorphism() const;
};

RingPtr make_zmod(std::size_t n, const Limits& limits = {});
RingPtr make_product(const RingPtr& r1, const RingPtr& r2, const Limits& limits = {});
/// R0[x]/(x^d), elements ordered by coefficient vector with the constant
/// coefficient least significant.
std::pair<RingPtr, RingElement> make_truncated_poly_ring(const RingPtr& r0, std::size_t d,
                                                         const Limits& limits = {});

struct ElementClasses {
  ElementSet units, zero_divisors, nilpotents, idempotents, regular;
};
ElementClasses classify_elements(const FiniteRing& r);

/// Exhaustive scan of the ring axioms; returns a description of the first
/// violation found. O(size^3).
std::optional<std::string> check_axioms(const FiniteRing& r);

/// Searches for a ring isomorphism a -> b, returned as an index table.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

}  // namespace contentlab
