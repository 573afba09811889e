#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contentlab/finring.hpp"
#include "contentlab/ideals.hpp"

namespace contentlab {

/// A finite commutative monoid by its operation table.
struct MonoidTable {
  std::size_t size = 0;
  std::vector<std::size_t> op;
  std::size_t identity = 0;
  std::string source;  // file path, empty when built in memory

  std::size_t apply(std::size_t a, std::size_t b) const { return op[a * size + b]; }

  static MonoidTable cyclic_group(std::size_t order);
  /// First line: size and identity index; then the table row by row.
  static MonoidTable parse(std::istream& in, std::string source = {});
  static MonoidTable read(const std::string& path);
  /// Throws invalid-monoid unless the table is associative, commutative and
  /// has the stated identity.
  void validate() const;
};

enum class Presentation { identity, truncated, quadratic, group, monoid };

class FreeAlgebra;
using AlgebraPtr = std::shared_ptr<const FreeAlgebra>;

/// A commutative algebra S that is free of finite rank over its base ring,
/// given by structure constants on a distinguished basis e_0..e_{m-1}.
/// Being free of positive rank, S is faithfully flat and Ohm-Rush over a
/// nonzero base.
class FreeAlgebra {
 public:
  struct Spec {
    RingPtr base;
    std::size_t rank = 0;
    std::vector<Elem> consts;  // consts[(i*rank + j)*rank + k] = coeff of e_k in e_i e_j
    std::vector<Elem> unit;
    std::vector<std::string> basis_names;
    std::string generator_symbol;
    std::optional<std::size_t> generator_basis;
    Presentation kind = Presentation::identity;
    std::size_t depth = 0;          // truncated
    Elem quad_param = 0;            // quadratic
    std::size_t group_order = 0;    // group
    std::optional<MonoidTable> monoid;
  };

  static AlgebraPtr create(Spec spec, const Limits& limits = {});

  const RingPtr& base() const { return base_; }
  std::size_t rank() const { return rank_; }
  /// Number of elements, base.size()^rank.
  std::size_t size() const { return size_; }
  Elem constant(std::size_t i, std::size_t j, std::size_t k) const {
    return consts_[(i * rank_ + j) * rank_ + k];
  }
  const std::vector<Elem>& unit() const { return unit_; }
  std::vector<Elem> zero() const { return std::vector<Elem>(rank_, base_->zero()); }
  std::vector<Elem> basis(std::size_t i) const;
  std::vector<Elem> embed(Elem r) const;

  /// Mixed-radix index with coordinate 0 least significant.
  std::size_t encode(std::span<const Elem> coords) const;
  std::vector<Elem> decode(std::size_t index) const;
  void decode_into(std::size_t index, std::span<Elem> out) const;

  std::vector<Elem> add(std::span<const Elem> a, std::span<const Elem> b) const;
  std::vector<Elem> neg(std::span<const Elem> a) const;
  std::vector<Elem> scale(Elem r, std::span<const Elem> a) const;
  std::vector<Elem> multiply(std::span<const Elem> a, std::span<const Elem> b) const;
  bool is_zero(std::span<const Elem> a) const;
  /// Matrix of g -> f*g: entry (k, j) is the e_k coefficient of f*e_j.
  std::vector<Elem> multiplication_matrix(std::span<const Elem> f) const;

  Presentation kind() const { return spec_.kind; }
  const Spec& presentation() const { return spec_; }
  const std::string& descriptor() const { return descriptor_; }
  const std::string& basis_name(std::size_t i) const { return spec_.basis_names[i]; }
  const std::string& generator_symbol() const { return spec_.generator_symbol; }
  std::optional<std::size_t> generator_basis() const { return spec_.generator_basis; }
  std::string element_name(std::span<const Elem> coords) const;

  /// The same presentation over the target of m, with every structure
  /// constant pushed along m.
  AlgebraPtr change_base(const RingMap& m, const Limits& limits = {}) const;

  bool same_structure(const FreeAlgebra& other) const;

 private:
  FreeAlgebra(Spec spec, std::size_t size);
  void check_axioms() const;

  Spec spec_;
  RingPtr base_;
  std::size_t rank_;
  std::size_t size_;
  std::vector<Elem> consts_, unit_;
  std::string descriptor_;
};

struct AlgebraElement {
  AlgebraPtr algebra;
  std::vector<Elem> coords;
};

AlgebraPtr alg_identity(const RingPtr& base, const Limits& limits = {});
AlgebraPtr alg_truncated(const RingPtr& base, std::size_t d, const Limits& limits = {});
/// R[y]/(y^2 - a) on the basis {1, y}.
AlgebraPtr alg_quadratic(const RingPtr& base, Elem a, const Limits& limits = {});
AlgebraPtr alg_monoid(const RingPtr& base, const MonoidTable& m, const Limits& limits = {});
AlgebraPtr alg_group(const RingPtr& base, std::size_t order, const Limits& limits = {});

enum class AlgOp { add, mul, neg };
AlgebraElement alg_arith(const AlgebraElement& f, const AlgebraElement& g, AlgOp op);
bool alg_equal(const AlgebraElement& f, const AlgebraElement& g);

/// c(f): for a free algebra, the ideal generated by the coordinates of f.
Ideal content(const AlgebraElement& f);
Ideal content(const FreeAlgebra& s, std::span<const Elem> coords);

/// c(f) computed literally as the intersection of all ideals I of the base
/// with f in IS. Throws std::logic_error if f is not in c(f)S.
Ideal content_oracle(const AlgebraElement& f, const IdealLattice& lattice);
Ideal content_oracle(const AlgebraElement& f, const Limits& limits = {});

/// Coordinatewise map S -> S' induced by a base ring map.
struct AlgebraMap {
  AlgebraPtr source, target;
  RingMap base;

  std::vector<Elem> apply(std::span<const Elem> coords) const;
  AlgebraElement operator()(const AlgebraElement& f) const;
  /// A preimage of each coordinate (least index), for surjective base maps.
  std::vector<Elem> lift(std::span<const Elem> coords) const;
};

/// S/IS over R/I.
AlgebraMap base_change(const AlgebraPtr& s, const Ideal& i, const Limits& limits = {});
/// W^-1 S over W^-1 R.
AlgebraMap localize_algebra(const AlgebraPtr& s, const SaturatedMultSet& w, const Limits& limits = {});

}  // namespace contentlab
