#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linsite/category.hpp"

namespace linsite {

/// A presheaf of finite k-modules on a linear category: one module per
/// object and a linear action value(B) -> value(A) for every morphism
/// A -> B, presented by one matrix per hom basis element.
class Presheaf {
 public:
  Presheaf(CategoryPtr cat, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> action);

  /// The representable presheaf hom(-, A).
  static Presheaf representable(CategoryPtr cat, ObjIndex a);

  const CategoryPtr& category() const { return cat_; }
  std::size_t dim(ObjIndex a) const { return dims_[a]; }
  /// Action matrix of the basis element fi of hom(a,b): value(b) -> value(a).
  const Matrix& basis_action(ObjIndex a, ObjIndex b, std::size_t fi) const {
    return action_[a * cat_->object_count() + b][fi];
  }
  /// Linear extension to an arbitrary element f of hom(a,b).
  Matrix action(ObjIndex a, ObjIndex b, const Vec& f) const;

  /// Functoriality: identities act as identities, composition reverses.
  ValidationReport validate() const;

 private:
  CategoryPtr cat_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix>> action_;  // [a*n+b][fi]: dims_[a] x dims_[b]
};

/// A sieve on target A: a subspace of hom(A', A) per object A', closed
/// under precomposition by every morphism.
class Sieve {
 public:
  Sieve(CategoryPtr cat, ObjIndex target, std::vector<Subspace> components);

  static Sieve maximal(CategoryPtr cat, ObjIndex target);
  static Sieve zero(CategoryPtr cat, ObjIndex target);

  const CategoryPtr& category() const { return cat_; }
  ObjIndex target() const { return target_; }
  const Subspace& component(ObjIndex a) const { return components_[a]; }
  bool is_maximal() const;

  /// Precomposition closure; names the first failing (element, morphism).
  ValidationReport check_closure() const;

  bool operator==(const Sieve& o) const;
  bool operator!=(const Sieve& o) const { return !(*this == o); }
  bool contains(const Sieve& o) const;
  Sieve intersect(const Sieve& o) const;
  /// Strict total order for deterministic sets of sieves.
  bool before(const Sieve& o) const;

 private:
  CategoryPtr cat_;
  ObjIndex target_;
  std::vector<Subspace> components_;
};

/// The smallest sieve containing the family of morphisms (src, element of
/// hom(src,target)); saturation under precomposition by all basis morphisms.
Sieve sieve_generated(CategoryPtr cat, ObjIndex target,
                      const std::vector<std::pair<ObjIndex, Vec>>& family);

/// Pullback of R along g in hom(src, R.target): componentwise preimage
/// under postcomposition with g.
Sieve pullback_sieve(const Sieve& r, ObjIndex src, const Vec& g);

/// The k-module of natural transformations R => F, with an explicit basis.
/// Each basis element is a family of matrices value-of-R(A') -> F(A').
class NatTransModule {
 public:
  std::size_t dim() const { return basis_.size(); }
  /// Component matrices of basis element i, one per object.
  const std::vector<Matrix>& basis_element(std::size_t i) const { return basis_[i]; }

  /// Coordinates of a natural family in this basis; nullopt if the family
  /// is not in the span (i.e. not natural).
  std::optional<Vec> coordinates_of(const std::vector<Matrix>& family) const;

  friend NatTransModule hom_from_sieve(const Sieve& r, const Presheaf& f);

 private:
  Field field_ = Field::rationals();
  std::vector<std::size_t> offsets_;  // flattening layout per object
  std::vector<std::vector<Matrix>> basis_;
  Subspace span_ = Subspace::zero(Field::rationals(), 0);
};

/// Solves the naturality system for families of maps R(A') -> F(A').
NatTransModule hom_from_sieve(const Sieve& r, const Presheaf& f);

/// Matrix of the restriction map F(A) -> Mod(R, F) in the module's basis,
/// sending x to the family r |-> F(r)(x).
Matrix restriction_matrix(const Sieve& r, const Presheaf& f, const NatTransModule& m);

/// F satisfies the descent condition along R: restriction is bijective.
bool sheaf_condition_holds(const Presheaf& f, const Sieve& r);

/// Restriction of scalars along a functor: value(A) = F(f(A)).
Presheaf restrict_presheaf(const LinFunctor& f, const Presheaf& F);

}  // namespace linsite
