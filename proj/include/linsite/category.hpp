#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linsite/linalg.hpp"

namespace linsite {

using ObjIndex = std::size_t;

struct ValidationReport {
  bool ok = true;
  std::string detail;  // names the first failing datum when !ok
};

class LinCategory;
using CategoryPtr = std::shared_ptr<const LinCategory>;

/// A finitely presented k-linear category: named objects, a free finite
/// k-module hom(a,b) with a named basis for every ordered object pair,
/// bilinear composition given by structure constants on those bases, and
/// an identity coordinate vector per object. Immutable once built.
class LinCategory {
 public:
  const Field& field() const { return field_; }
  std::size_t object_count() const { return objects_.size(); }
  const std::string& object_name(ObjIndex a) const { return objects_[a]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  std::optional<ObjIndex> object_index(const std::string& name) const;

  std::size_t hom_dim(ObjIndex a, ObjIndex b) const { return dims_[a * objects_.size() + b]; }
  const std::vector<std::string>& hom_basis_names(ObjIndex a, ObjIndex b) const {
    return basis_names_[a * objects_.size() + b];
  }
  const Vec& identity(ObjIndex a) const { return identities_[a]; }

  /// Structure constants: coordinates of (basis g of hom(b,c)) after (basis f
  /// of hom(a,b)) in hom(a,c).
  const Vec& comp_const(ObjIndex a, ObjIndex b, ObjIndex c, std::size_t gi,
                        std::size_t fi) const;

  /// Bilinear composition g after f for g in hom(b,c), f in hom(a,b).
  Vec compose(ObjIndex a, ObjIndex b, ObjIndex c, const Vec& g, const Vec& f) const;

  /// Matrix of f |-> g after f, hom(a,b) -> hom(a,c).
  Matrix postcompose_map(ObjIndex a, ObjIndex b, ObjIndex c, const Vec& g) const;
  /// Matrix of g |-> g after f, hom(b,c) -> hom(a,c).
  Matrix precompose_map(ObjIndex a, ObjIndex b, ObjIndex c, const Vec& f) const;

  /// Two-sided inverse search: g with g.f = id_a and f.g = id_b.
  std::optional<Vec> inverse_of(ObjIndex a, ObjIndex b, const Vec& f) const;

  /// Associativity on all basis triples, unit laws on all basis elements.
  ValidationReport validate() const;

  bool operator==(const LinCategory& o) const;

  friend class LinCategoryBuilder;

 private:
  LinCategory() : field_(Field::rationals()) {}
  Field field_;
  std::vector<std::string> objects_;
  std::map<std::string, ObjIndex> object_index_;
  std::vector<std::size_t> dims_;                        // [a*n+b]
  std::vector<std::vector<std::string>> basis_names_;    // [a*n+b]
  std::vector<Vec> identities_;                          // [a]
  // comp_[(a*n+b)*n+c][gi*dim(a,b)+fi]
  std::vector<std::vector<Vec>> comp_;
};

/// Incremental construction; unset structure constants default to zero.
class LinCategoryBuilder {
 public:
  explicit LinCategoryBuilder(const Field& f);

  LinCategoryBuilder& add_object(const std::string& name);
  /// Declares hom(a,b) with the given basis names (must be fresh in this category).
  LinCategoryBuilder& add_hom(const std::string& a, const std::string& b,
                              const std::vector<std::string>& basis);
  /// result holds coordinates in hom(a,c) for g in hom(b,c), f in hom(a,b).
  LinCategoryBuilder& set_composition(const std::string& g, const std::string& f,
                                      const std::map<std::string, Scalar>& result);
  LinCategoryBuilder& set_identity(const std::string& obj,
                                   const std::map<std::string, Scalar>& coords);
  /// Convenience for the common case of an identity basis element.
  LinCategoryBuilder& set_identity_basis(const std::string& obj, const std::string& basis);

  /// Finalizes; throws DomainError on missing identities or dangling names.
  /// Does not run validate(): callers decide whether to check the laws.
  CategoryPtr build() const;

 private:
  struct HomKey {
    ObjIndex a, b;
  };
  Field field_;
  std::vector<std::string> objects_;
  std::map<std::string, ObjIndex> object_index_;
  std::map<std::pair<ObjIndex, ObjIndex>, std::vector<std::string>> homs_;
  // basis element name -> (src, dst, index)
  std::map<std::string, std::tuple<ObjIndex, ObjIndex, std::size_t>> basis_lookup_;
  std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>> comps_;
  std::map<std::string, std::map<std::string, Scalar>> identity_coords_;
};

/// A k-linear functor presented by an object map and one matrix per hom pair.
class LinFunctor {
 public:
  LinFunctor() = default;
  LinFunctor(CategoryPtr src, CategoryPtr dst, std::vector<ObjIndex> obj_map,
             std::vector<Matrix> hom_maps);

  static LinFunctor identity(CategoryPtr c);

  const CategoryPtr& src() const { return src_; }
  const CategoryPtr& dst() const { return dst_; }
  ObjIndex map_obj(ObjIndex a) const { return obj_map_[a]; }
  const Matrix& hom_map(ObjIndex a, ObjIndex b) const {
    return hom_maps_[a * src_->object_count() + b];
  }
  Vec map_hom(ObjIndex a, ObjIndex b, const Vec& f) const {
    return hom_map(a, b).apply(f);
  }

  /// Identity and composition preservation on all bases.
  ValidationReport validate() const;

  bool operator==(const LinFunctor& o) const;

 private:
  CategoryPtr src_, dst_;
  std::vector<ObjIndex> obj_map_;
  std::vector<Matrix> hom_maps_;  // [a*n+b]: hom_dim(Fa,Fb) x hom_dim(a,b)
};

/// g after f.
LinFunctor compose_functors(const LinFunctor& g, const LinFunctor& f);

/// A k-linear natural transformation between parallel functors.
class LinNatTrans {
 public:
  LinNatTrans() = default;
  LinNatTrans(const LinFunctor& src, const LinFunctor& dst, std::vector<Vec> components);

  const LinFunctor& src() const { return src_; }
  const LinFunctor& dst() const { return dst_; }
  const Vec& component(ObjIndex a) const { return components_[a]; }

  ValidationReport validate() const;

 private:
  LinFunctor src_, dst_;
  std::vector<Vec> components_;  // [a]: vector in hom(Fa, Ga)
};

/// Basis of the k-module of natural transformations src => dst.
std::vector<LinNatTrans> nat_trans_basis(const LinFunctor& src, const LinFunctor& dst);

struct FullSubcategory {
  CategoryPtr category;
  LinFunctor inclusion;
  std::vector<ObjIndex> parent_objects;  // object i of the subcategory in the parent
};

/// Hom modules and composition restricted verbatim to the chosen objects.
FullSubcategory full_subcategory(CategoryPtr c, const std::vector<std::string>& objects);

struct TensorCategory {
  CategoryPtr category;
  std::size_t left_objects = 0, right_objects = 0;
  ObjIndex object_of(ObjIndex a, ObjIndex b) const { return a * right_objects + b; }
  std::pair<ObjIndex, ObjIndex> factors(ObjIndex t) const {
    return {t / right_objects, t % right_objects};
  }
};

/// Carrier of the tensor product of linear categories: object pairs,
/// hom((A,B),(A',B')) = hom(A,A') (x) hom(B,B'), componentwise composition.
TensorCategory tensor_category(CategoryPtr a, CategoryPtr b);

/// Kronecker-product functor between tensor carriers.
LinFunctor tensor_functor(const LinFunctor& f, const LinFunctor& g, const TensorCategory& src,
                          const TensorCategory& dst);

/// Index of the tensor basis element (fi, gi) inside hom((A,B),(A',B')).
std::size_t tensor_basis_index(std::size_t fi, std::size_t gi, std::size_t right_dim);

/// Exactly all k-linear functors a -> b; prime fields, bounded search.
std::vector<LinFunctor> enumerate_functors(CategoryPtr a, CategoryPtr b, const Bounds& bounds);

}  // namespace linsite
