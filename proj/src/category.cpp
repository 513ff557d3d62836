#include "linsite/category.hpp"

#include <algorithm>
#include <functional>

namespace linsite {

std::optional<ObjIndex> LinCategory::object_index(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

const Vec& LinCategory::comp_const(ObjIndex a, ObjIndex b, ObjIndex c, std::size_t gi,
                                   std::size_t fi) const {
  std::size_t n = objects_.size();
  return comp_[(a * n + b) * n + c][gi * hom_dim(a, b) + fi];
}

Vec LinCategory::compose(ObjIndex a, ObjIndex b, ObjIndex c, const Vec& g, const Vec& f) const {
  if (g.dim() != hom_dim(b, c) || f.dim() != hom_dim(a, b))
    throw DomainError("compose: element dimensions do not match hom modules");
  Vec out(field_, hom_dim(a, c));
  for (std::size_t gi = 0; gi < g.dim(); ++gi) {
    if (g[gi].is_zero()) continue;
    for (std::size_t fi = 0; fi < f.dim(); ++fi) {
      if (f[fi].is_zero()) continue;
      out.add_scaled(comp_const(a, b, c, gi, fi), g[gi] * f[fi]);
    }
  }
  return out;
}

Matrix LinCategory::postcompose_map(ObjIndex a, ObjIndex b, ObjIndex c, const Vec& g) const {
  Matrix m(field_, hom_dim(a, c), hom_dim(a, b));
  for (std::size_t fi = 0; fi < hom_dim(a, b); ++fi) {
    Vec img = compose(a, b, c, g, Vec::unit(field_, hom_dim(a, b), fi));
    for (std::size_t i = 0; i < img.dim(); ++i) m.at(i, fi) = img[i];
  }
  return m;
}

Matrix LinCategory::precompose_map(ObjIndex a, ObjIndex b, ObjIndex c, const Vec& f) const {
  Matrix m(field_, hom_dim(a, c), hom_dim(b, c));
  for (std::size_t gi = 0; gi < hom_dim(b, c); ++gi) {
    Vec img = compose(a, b, c, Vec::unit(field_, hom_dim(b, c), gi), f);
    for (std::size_t i = 0; i < img.dim(); ++i) m.at(i, gi) = img[i];
  }
  return m;
}

std::optional<Vec> LinCategory::inverse_of(ObjIndex a, ObjIndex b, const Vec& f) const {
  // g in hom(b,a) with g.f = id_a and f.g = id_b.
  Matrix gf = precompose_map(a, b, a, f);    // g |-> g.f
  Matrix fg = postcompose_map(b, a, b, f);   // g |-> f.g
  Matrix sys = gf.vstack(fg);
  Vec rhs = identity(a).concat(identity(b));
  SolveResult s = solve(sys, rhs);
  if (!s.consistent) return std::nullopt;
  return s.particular;
}

ValidationReport LinCategory::validate() const {
  std::size_t n = objects_.size();
  for (ObjIndex a = 0; a < n; ++a)
    for (ObjIndex b = 0; b < n; ++b)
      for (std::size_t fi = 0; fi < hom_dim(a, b); ++fi) {
        Vec e = Vec::unit(field_, hom_dim(a, b), fi);
        if (compose(a, b, b, identity(b), e) != e)
          return {false, "left unit law fails on '" + hom_basis_names(a, b)[fi] + "'"};
        if (compose(a, a, b, e, identity(a)) != e)
          return {false, "right unit law fails on '" + hom_basis_names(a, b)[fi] + "'"};
      }
  for (ObjIndex a = 0; a < n; ++a)
    for (ObjIndex b = 0; b < n; ++b)
      for (ObjIndex c = 0; c < n; ++c)
        for (ObjIndex d = 0; d < n; ++d)
          for (std::size_t fi = 0; fi < hom_dim(a, b); ++fi)
            for (std::size_t gi = 0; gi < hom_dim(b, c); ++gi)
              for (std::size_t hi = 0; hi < hom_dim(c, d); ++hi) {
                Vec f = Vec::unit(field_, hom_dim(a, b), fi);
                Vec g = Vec::unit(field_, hom_dim(b, c), gi);
                Vec h = Vec::unit(field_, hom_dim(c, d), hi);
                Vec left = compose(a, b, d, compose(b, c, d, h, g), f);
                Vec right = compose(a, c, d, h, compose(a, b, c, g, f));
                if (left != right)
                  return {false, "associativity fails on triple ('" +
                                     hom_basis_names(c, d)[hi] + "','" +
                                     hom_basis_names(b, c)[gi] + "','" +
                                     hom_basis_names(a, b)[fi] + "')"};
              }
  return {};
}

bool LinCategory::operator==(const LinCategory& o) const {
  if (field_ != o.field_ || objects_ != o.objects_ || dims_ != o.dims_ ||
      basis_names_ != o.basis_names_)
    return false;
  for (std::size_t i = 0; i < identities_.size(); ++i)
    if (identities_[i] != o.identities_[i]) return false;
  for (std::size_t i = 0; i < comp_.size(); ++i) {
    if (comp_[i].size() != o.comp_[i].size()) return false;
    for (std::size_t j = 0; j < comp_[i].size(); ++j)
      if (comp_[i][j] != o.comp_[i][j]) return false;
  }
  return true;
}

LinCategoryBuilder::LinCategoryBuilder(const Field& f) : field_(f) {}

LinCategoryBuilder& LinCategoryBuilder::add_object(const std::string& name) {
  if (object_index_.count(name)) throw DomainError("duplicate object '" + name + "'");
  object_index_[name] = objects_.size();
  objects_.push_back(name);
  return *this;
}

LinCategoryBuilder& LinCategoryBuilder::add_hom(const std::string& a, const std::string& b,
                                                const std::vector<std::string>& basis) {
  auto ia = object_index_.find(a), ib = object_index_.find(b);
  if (ia == object_index_.end() || ib == object_index_.end())
    throw DomainError("add_hom references unknown object");
  auto key = std::make_pair(ia->second, ib->second);
  if (homs_.count(key)) throw DomainError("hom(" + a + "," + b + ") declared twice");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis_lookup_.count(basis[i]))
      throw DomainError("duplicate basis name '" + basis[i] + "'");
    basis_lookup_[basis[i]] = {ia->second, ib->second, i};
  }
  homs_[key] = basis;
  return *this;
}

LinCategoryBuilder& LinCategoryBuilder::set_composition(
    const std::string& g, const std::string& f, const std::map<std::string, Scalar>& result) {
  comps_[{g, f}] = result;
  return *this;
}

LinCategoryBuilder& LinCategoryBuilder::set_identity(
    const std::string& obj, const std::map<std::string, Scalar>& coords) {
  if (!object_index_.count(obj)) throw DomainError("set_identity: unknown object '" + obj + "'");
  identity_coords_[obj] = coords;
  return *this;
}

LinCategoryBuilder& LinCategoryBuilder::set_identity_basis(const std::string& obj,
                                                           const std::string& basis) {
  return set_identity(obj, {{basis, Scalar::one(field_)}});
}

CategoryPtr LinCategoryBuilder::build() const {
  auto cat = std::shared_ptr<LinCategory>(new LinCategory());
  cat->field_ = field_;
  cat->objects_ = objects_;
  cat->object_index_ = object_index_;
  std::size_t n = objects_.size();
  cat->dims_.assign(n * n, 0);
  cat->basis_names_.assign(n * n, {});
  for (const auto& [key, basis] : homs_) {
    cat->dims_[key.first * n + key.second] = basis.size();
    cat->basis_names_[key.first * n + key.second] = basis;
  }
  // zero-initialized structure constants
  cat->comp_.assign(n * n * n, {});
  for (ObjIndex a = 0; a < n; ++a)
    for (ObjIndex b = 0; b < n; ++b)
      for (ObjIndex c = 0; c < n; ++c)
        cat->comp_[(a * n + b) * n + c].assign(
            cat->dims_[b * n + c] * cat->dims_[a * n + b],
            Vec(field_, cat->dims_[a * n + c]));
  auto coords_to_vec = [&](ObjIndex a, ObjIndex c, const std::map<std::string, Scalar>& coords,
                           const std::string& what) {
    Vec v(field_, cat->dims_[a * n + c]);
    const auto& names = cat->basis_names_[a * n + c];
    for (const auto& [name, scalar] : coords) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end())
        throw DomainError(what + ": '" + name + "' is not a basis element of the target hom");
      if (scalar.field() != field_) throw DomainError(what + ": scalar field mismatch");
      v[static_cast<std::size_t>(it - names.begin())] = scalar;
    }
    return v;
  };
  for (const auto& [gf, result] : comps_) {
    auto ig = basis_lookup_.find(gf.first);
    auto jf = basis_lookup_.find(gf.second);
    if (ig == basis_lookup_.end())
      throw DomainError("composition references unknown basis '" + gf.first + "'");
    if (jf == basis_lookup_.end())
      throw DomainError("composition references unknown basis '" + gf.second + "'");
    auto [b1, c, gi] = ig->second;
    auto [a, b2, fi] = jf->second;
    if (b1 != b2)
      throw DomainError("composition '" + gf.first + "' after '" + gf.second +
                        "' is not composable");
    cat->comp_[(a * n + b1) * n + c][gi * cat->dims_[a * n + b1] + fi] =
        coords_to_vec(a, c, result, "composition '" + gf.first + "'.'" + gf.second + "'");
  }
  cat->identities_.reserve(n);
  for (ObjIndex a = 0; a < n; ++a) {
    auto it = identity_coords_.find(objects_[a]);
    if (it == identity_coords_.end()) {
      if (cat->dims_[a * n + a] != 0)
        throw DomainError("object '" + objects_[a] + "' has no identity vector");
      cat->identities_.push_back(Vec(field_, 0));
    } else {
      cat->identities_.push_back(coords_to_vec(a, a, it->second, "identity of " + objects_[a]));
    }
  }
  return cat;
}

LinFunctor::LinFunctor(CategoryPtr src, CategoryPtr dst, std::vector<ObjIndex> obj_map,
                       std::vector<Matrix> hom_maps)
    : src_(std::move(src)), dst_(std::move(dst)), obj_map_(std::move(obj_map)),
      hom_maps_(std::move(hom_maps)) {
  std::size_t n = src_->object_count();
  if (obj_map_.size() != n || hom_maps_.size() != n * n)
    throw DomainError("functor data has wrong arity");
  for (ObjIndex a = 0; a < n; ++a) {
    if (obj_map_[a] >= dst_->object_count()) throw DomainError("functor object map out of range");
    for (ObjIndex b = 0; b < n; ++b) {
      const Matrix& m = hom_maps_[a * n + b];
      if (m.rows() != dst_->hom_dim(obj_map_[a], obj_map_[b]) || m.cols() != src_->hom_dim(a, b))
        throw DomainError("functor hom map has wrong shape at (" + src_->object_name(a) + "," +
                          src_->object_name(b) + ")");
    }
  }
}

LinFunctor LinFunctor::identity(CategoryPtr c) {
  std::size_t n = c->object_count();
  std::vector<ObjIndex> obj(n);
  std::vector<Matrix> maps(n * n);
  for (ObjIndex a = 0; a < n; ++a) {
    obj[a] = a;
    for (ObjIndex b = 0; b < n; ++b)
      maps[a * n + b] = Matrix::identity(c->field(), c->hom_dim(a, b));
  }
  return LinFunctor(c, c, std::move(obj), std::move(maps));
}

ValidationReport LinFunctor::validate() const {
  std::size_t n = src_->object_count();
  for (ObjIndex a = 0; a < n; ++a)
    if (map_hom(a, a, src_->identity(a)) != dst_->identity(obj_map_[a]))
      return {false, "identity of '" + src_->object_name(a) + "' not preserved"};
  for (ObjIndex a = 0; a < n; ++a)
    for (ObjIndex b = 0; b < n; ++b)
      for (ObjIndex c = 0; c < n; ++c)
        for (std::size_t gi = 0; gi < src_->hom_dim(b, c); ++gi)
          for (std::size_t fi = 0; fi < src_->hom_dim(a, b); ++fi) {
            Vec g = Vec::unit(src_->field(), src_->hom_dim(b, c), gi);
            Vec f = Vec::unit(src_->field(), src_->hom_dim(a, b), fi);
            Vec lhs = map_hom(a, c, src_->compose(a, b, c, g, f));
            Vec rhs = dst_->compose(obj_map_[a], obj_map_[b], obj_map_[c], map_hom(b, c, g),
                                    map_hom(a, b, f));
            if (lhs != rhs)
              return {false, "composition not preserved on ('" +
                                 src_->hom_basis_names(b, c)[gi] + "','" +
                                 src_->hom_basis_names(a, b)[fi] + "')"};
          }
  return {};
}

bool LinFunctor::operator==(const LinFunctor& o) const {
  if (obj_map_ != o.obj_map_) return false;
  if (!(src_ == o.src_ || *src_ == *o.src_)) return false;
  if (!(dst_ == o.dst_ || *dst_ == *o.dst_)) return false;
  for (std::size_t i = 0; i < hom_maps_.size(); ++i)
    if (hom_maps_[i] != o.hom_maps_[i]) return false;
  return true;
}

LinFunctor compose_functors(const LinFunctor& g, const LinFunctor& f) {
  if (!(f.dst() == g.src() || *f.dst() == *g.src()))
    throw DomainError("compose_functors: middle categories differ");
  std::size_t n = f.src()->object_count();
  std::vector<ObjIndex> obj(n);
  std::vector<Matrix> maps(n * n);
  for (ObjIndex a = 0; a < n; ++a) {
    obj[a] = g.map_obj(f.map_obj(a));
    for (ObjIndex b = 0; b < n; ++b)
      maps[a * n + b] = g.hom_map(f.map_obj(a), f.map_obj(b)) * f.hom_map(a, b);
  }
  return LinFunctor(f.src(), g.dst(), std::move(obj), std::move(maps));
}

LinNatTrans::LinNatTrans(const LinFunctor& src, const LinFunctor& dst, std::vector<Vec> components)
    : src_(src), dst_(dst), components_(std::move(components)) {
  if (components_.size() != src.src()->object_count())
    throw DomainError("natural transformation has wrong component count");
}

ValidationReport LinNatTrans::validate() const {
  const auto& a = *src_.src();
  const auto& b = *src_.dst();
  for (ObjIndex x = 0; x < a.object_count(); ++x)
    if (components_[x].dim() != b.hom_dim(src_.map_obj(x), dst_.map_obj(x)))
      return {false, "component at '" + a.object_name(x) + "' has wrong dimension"};
  for (ObjIndex x = 0; x < a.object_count(); ++x)
    for (ObjIndex y = 0; y < a.object_count(); ++y)
      for (std::size_t fi = 0; fi < a.hom_dim(x, y); ++fi) {
        Vec f = Vec::unit(a.field(), a.hom_dim(x, y), fi);
        Vec lhs = b.compose(src_.map_obj(x), src_.map_obj(y), dst_.map_obj(y), components_[y],
                            src_.map_hom(x, y, f));
        Vec rhs = b.compose(src_.map_obj(x), dst_.map_obj(x), dst_.map_obj(y),
                            dst_.map_hom(x, y, f), components_[x]);
        if (lhs != rhs)
          return {false, "naturality fails on '" + a.hom_basis_names(x, y)[fi] + "'"};
      }
  return {};
}

std::vector<LinNatTrans> nat_trans_basis(const LinFunctor& src, const LinFunctor& dst) {
  const auto& a = *src.src();
  const auto& b = *src.dst();
  const Field& k = a.field();
  std::size_t n = a.object_count();
  // unknown layout: blocks of hom(Fx, Gx) per object x
  std::vector<std::size_t> offset(n + 1, 0);
  for (ObjIndex x = 0; x < n; ++x)
    offset[x + 1] = offset[x] + b.hom_dim(src.map_obj(x), dst.map_obj(x));
  std::size_t unknowns = offset[n];
  std::vector<Vec> rows;
  for (ObjIndex x = 0; x < n; ++x)
    for (ObjIndex y = 0; y < n; ++y)
      for (std::size_t fi = 0; fi < a.hom_dim(x, y); ++fi) {
        Vec f = Vec::unit(k, a.hom_dim(x, y), fi);
        // component_y . F(f) - G(f) . component_x = 0 in hom(Fx, Gy)
        Matrix lhs = b.precompose_map(src.map_obj(x), src.map_obj(y), dst.map_obj(y),
                                      src.map_hom(x, y, f));
        Matrix rhs = b.postcompose_map(src.map_obj(x), dst.map_obj(x), dst.map_obj(y),
                                       dst.map_hom(x, y, f));
        for (std::size_t r = 0; r < lhs.rows(); ++r) {
          Vec row(k, unknowns);
          for (std::size_t c = 0; c < lhs.cols(); ++c) row[offset[y] + c] = lhs.at(r, c);
          for (std::size_t c = 0; c < rhs.cols(); ++c)
            row[offset[x] + c] = row[offset[x] + c] - rhs.at(r, c);
          rows.push_back(row);
        }
      }
  Matrix sys = Matrix::from_rows(k, rows, unknowns);
  Matrix ker = nullspace(sys);
  std::vector<LinNatTrans> basis;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Vec sol = ker.row(i);
    std::vector<Vec> comps;
    for (ObjIndex x = 0; x < n; ++x) comps.push_back(sol.slice(offset[x], offset[x + 1] - offset[x]));
    basis.emplace_back(src, dst, std::move(comps));
  }
  return basis;
}

FullSubcategory full_subcategory(CategoryPtr c, const std::vector<std::string>& objects) {
  LinCategoryBuilder builder(c->field());
  std::vector<ObjIndex> parent;
  for (const auto& name : objects) {
    auto idx = c->object_index(name);
    if (!idx) throw DomainError("full_subcategory: unknown object '" + name + "'");
    builder.add_object(name);
    parent.push_back(*idx);
  }
  std::size_t m = parent.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      builder.add_hom(objects[i], objects[j], c->hom_basis_names(parent[i], parent[j]));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t gi = 0; gi < c->hom_dim(parent[j], parent[k]); ++gi)
          for (std::size_t fi = 0; fi < c->hom_dim(parent[i], parent[j]); ++fi) {
            const Vec& res = c->comp_const(parent[i], parent[j], parent[k], gi, fi);
            std::map<std::string, Scalar> coords;
            for (std::size_t r = 0; r < res.dim(); ++r)
              if (!res[r].is_zero())
                coords[c->hom_basis_names(parent[i], parent[k])[r]] = res[r];
            builder.set_composition(c->hom_basis_names(parent[j], parent[k])[gi],
                                    c->hom_basis_names(parent[i], parent[j])[fi], coords);
          }
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& id = c->identity(parent[i]);
    std::map<std::string, Scalar> coords;
    for (std::size_t r = 0; r < id.dim(); ++r)
      if (!id[r].is_zero()) coords[c->hom_basis_names(parent[i], parent[i])[r]] = id[r];
    builder.set_identity(objects[i], coords);
  }
  CategoryPtr sub = builder.build();
  std::vector<Matrix> maps(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      maps[i * m + j] = Matrix::identity(c->field(), sub->hom_dim(i, j));
  LinFunctor inclusion(sub, c, parent, std::move(maps));
  return {sub, std::move(inclusion), std::move(parent)};
}

std::size_t tensor_basis_index(std::size_t fi, std::size_t gi, std::size_t right_dim) {
  return fi * right_dim + gi;
}

TensorCategory tensor_category(CategoryPtr a, CategoryPtr b) {
  if (a->field() != b->field()) throw DomainError("tensor_category: field mismatch");
  const Field& k = a->field();
  LinCategoryBuilder builder(k);
  std::size_t na = a->object_count(), nb = b->object_count();
  auto obj_name = [&](ObjIndex i, ObjIndex j) {
    return "(" + a->object_name(i) + "," + b->object_name(j) + ")";
  };
  auto basis_name = [&](const std::string& f, const std::string& g) {
    return "(" + f + "," + g + ")";
  };
  for (ObjIndex i = 0; i < na; ++i)
    for (ObjIndex j = 0; j < nb; ++j) builder.add_object(obj_name(i, j));
  for (ObjIndex i = 0; i < na; ++i)
    for (ObjIndex j = 0; j < nb; ++j)
      for (ObjIndex i2 = 0; i2 < na; ++i2)
        for (ObjIndex j2 = 0; j2 < nb; ++j2) {
          std::vector<std::string> names;
          for (const auto& f : a->hom_basis_names(i, i2))
            for (const auto& g : b->hom_basis_names(j, j2)) names.push_back(basis_name(f, g));
          builder.add_hom(obj_name(i, j), obj_name(i2, j2), names);
        }
  // composition: (g1,g2).(f1,f2) = (g1.f1 , g2.f2), expanded bilinearly
  for (ObjIndex i = 0; i < na; ++i)
    for (ObjIndex j = 0; j < nb; ++j)
      for (ObjIndex i2 = 0; i2 < na; ++i2)
        for (ObjIndex j2 = 0; j2 < nb; ++j2)
          for (ObjIndex i3 = 0; i3 < na; ++i3)
            for (ObjIndex j3 = 0; j3 < nb; ++j3)
              for (std::size_t g1 = 0; g1 < a->hom_dim(i2, i3); ++g1)
                for (std::size_t g2 = 0; g2 < b->hom_dim(j2, j3); ++g2)
                  for (std::size_t f1 = 0; f1 < a->hom_dim(i, i2); ++f1)
                    for (std::size_t f2 = 0; f2 < b->hom_dim(j, j2); ++f2) {
                      const Vec& ra = a->comp_const(i, i2, i3, g1, f1);
                      const Vec& rb = b->comp_const(j, j2, j3, g2, f2);
                      std::map<std::string, Scalar> coords;
                      for (std::size_t u = 0; u < ra.dim(); ++u)
                        for (std::size_t v = 0; v < rb.dim(); ++v) {
                          Scalar s = ra[u] * rb[v];
                          if (!s.is_zero())
                            coords[basis_name(a->hom_basis_names(i, i3)[u],
                                              b->hom_basis_names(j, j3)[v])] = s;
                        }
                      builder.set_composition(
                          basis_name(a->hom_basis_names(i2, i3)[g1], b->hom_basis_names(j2, j3)[g2]),
                          basis_name(a->hom_basis_names(i, i2)[f1], b->hom_basis_names(j, j2)[f2]),
                          coords);
                    }
  for (ObjIndex i = 0; i < na; ++i)
    for (ObjIndex j = 0; j < nb; ++j) {
      const Vec& ia = a->identity(i);
      const Vec& ib = b->identity(j);
      std::map<std::string, Scalar> coords;
      for (std::size_t u = 0; u < ia.dim(); ++u)
        for (std::size_t v = 0; v < ib.dim(); ++v) {
          Scalar s = ia[u] * ib[v];
          if (!s.is_zero())
            coords[basis_name(a->hom_basis_names(i, i)[u], b->hom_basis_names(j, j)[v])] = s;
        }
      builder.set_identity(obj_name(i, j), coords);
    }
  TensorCategory out;
  out.category = builder.build();
  out.left_objects = na;
  out.right_objects = nb;
  return out;
}

LinFunctor tensor_functor(const LinFunctor& f, const LinFunctor& g, const TensorCategory& src,
                          const TensorCategory& dst) {
  std::size_t na = f.src()->object_count(), nb = g.src()->object_count();
  std::size_t n = na * nb;
  std::vector<ObjIndex> obj(n);
  std::vector<Matrix> maps(n * n);
  const Field& k = f.src()->field();
  for (ObjIndex i = 0; i < na; ++i)
    for (ObjIndex j = 0; j < nb; ++j)
      obj[src.object_of(i, j)] = dst.object_of(f.map_obj(i), g.map_obj(j));
  for (ObjIndex i = 0; i < na; ++i)
    for (ObjIndex j = 0; j < nb; ++j)
      for (ObjIndex i2 = 0; i2 < na; ++i2)
        for (ObjIndex j2 = 0; j2 < nb; ++j2) {
          const Matrix& mf = f.hom_map(i, i2);
          const Matrix& mg = g.hom_map(j, j2);
          Matrix kron(k, mf.rows() * mg.rows(), mf.cols() * mg.cols());
          for (std::size_t r1 = 0; r1 < mf.rows(); ++r1)
            for (std::size_t r2 = 0; r2 < mg.rows(); ++r2)
              for (std::size_t c1 = 0; c1 < mf.cols(); ++c1)
                for (std::size_t c2 = 0; c2 < mg.cols(); ++c2)
                  kron.at(tensor_basis_index(r1, r2, mg.rows()),
                          tensor_basis_index(c1, c2, mg.cols())) = mf.at(r1, c1) * mg.at(r2, c2);
          maps[src.object_of(i, j) * n + src.object_of(i2, j2)] = std::move(kron);
        }
  return LinFunctor(src.category, dst.category, std::move(obj), std::move(maps));
}

namespace {

// All matrices of the given shape whose vectorization solves cons * vec = rhs
// (pass an empty system for "all matrices").
std::vector<Matrix> constrained_matrices(const Field& k, std::size_t rows, std::size_t cols,
                                         const std::vector<Vec>& cons_rows, const Vec& rhs,
                                         const Bounds& bounds) {
  std::size_t unknowns = rows * cols;
  Matrix sys = Matrix::from_rows(k, cons_rows, unknowns);
  std::vector<Matrix> out;
  Vec particular(k, unknowns);
  Matrix ker = Matrix::identity(k, unknowns);
  if (!cons_rows.empty()) {
    SolveResult s = solve(sys, rhs);
    if (!s.consistent) return out;
    particular = s.particular;
    ker = nullspace(sys);
  }
  for (const Vec& lambda : enumerate_vectors(k, ker.rows(), bounds)) {
    Vec v = particular;
    for (std::size_t i = 0; i < ker.rows(); ++i) v.add_scaled(ker.row(i), lambda[i]);
    Matrix m(k, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = v[r * cols + c];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<LinFunctor> enumerate_functors(CategoryPtr a, CategoryPtr b, const Bounds& bounds) {
  const Field& k = a->field();
  if (k != b->field()) throw DomainError("enumerate_functors: field mismatch");
  if (!k.is_prime_field()) throw DomainError("enumerate_functors requires a prime field");
  std::size_t n = a->object_count();
  std::vector<LinFunctor> found;
  if (n == 0) {
    found.push_back(LinFunctor(a, b, {}, {}));
    return found;
  }
  if (b->object_count() == 0) return found;

  std::vector<ObjIndex> obj(n, 0);
  while (true) {
    // candidate hom maps per ordered pair, identity-constrained on the diagonal
    std::vector<std::vector<Matrix>> cands(n * n);
    bool feasible = true;
    std::uint64_t total = 1;
    for (ObjIndex x = 0; x < n && feasible; ++x)
      for (ObjIndex y = 0; y < n && feasible; ++y) {
        std::size_t ds = a->hom_dim(x, y), dd = b->hom_dim(obj[x], obj[y]);
        std::vector<Vec> cons;
        Vec rhs(k, 0);
        if (x == y) {
          const Vec& id_src = a->identity(x);
          const Vec& id_dst = b->identity(obj[x]);
          for (std::size_t r = 0; r < dd; ++r) {
            Vec row(k, dd * ds);
            for (std::size_t c = 0; c < ds; ++c) row[r * ds + c] = id_src[c];
            cons.push_back(row);
          }
          rhs = id_dst;
        }
        auto ms = constrained_matrices(k, dd, ds, cons, rhs, bounds);
        if (ms.empty()) feasible = false;
        if (total > bounds.max_functors / std::max<std::size_t>(ms.size(), 1))
          throw BoundExceeded("functor enumeration bound exceeded");
        total *= std::max<std::size_t>(ms.size(), 1);
        cands[x * n + y] = std::move(ms);
      }
    if (feasible) {
      // backtracking over pairs in lexicographic order, pruning with every
      // composition constraint whose three pairs are already assigned
      std::vector<Matrix> assign(n * n);
      std::vector<std::size_t> choice(n * n, 0);
      auto pair_rank = [n](ObjIndex x, ObjIndex y) { return x * n + y; };
      std::function<void(std::size_t)> rec = [&](std::size_t pr) {
        if (pr == n * n) {
          std::vector<Matrix> maps = assign;
          found.push_back(LinFunctor(a, b, obj, std::move(maps)));
          return;
        }
        for (const Matrix& m : cands[pr]) {
          assign[pr] = m;
          bool ok = true;
          // check triples (u,v,w) with all three pairs assigned and at least one == pr
          for (ObjIndex u = 0; u < n && ok; ++u)
            for (ObjIndex v = 0; v < n && ok; ++v)
              for (ObjIndex w = 0; w < n && ok; ++w) {
                std::size_t puv = pair_rank(u, v), pvw = pair_rank(v, w), puw = pair_rank(u, w);
                if (puv > pr || pvw > pr || puw > pr) continue;
                if (puv != pr && pvw != pr && puw != pr) continue;
                for (std::size_t gi = 0; gi < a->hom_dim(v, w) && ok; ++gi)
                  for (std::size_t fi = 0; fi < a->hom_dim(u, v) && ok; ++fi) {
                    Vec lhs = assign[puw].apply(a->comp_const(u, v, w, gi, fi));
                    Vec rhs2 = b->compose(
                        obj[u], obj[v], obj[w],
                        assign[pvw].apply(Vec::unit(k, a->hom_dim(v, w), gi)),
                        assign[puv].apply(Vec::unit(k, a->hom_dim(u, v), fi)));
                    if (lhs != rhs2) ok = false;
                  }
              }
          if (ok) rec(pr + 1);
        }
      };
      rec(0);
    }
    // next object map
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (++obj[i] < b->object_count()) {
        advanced = true;
        break;
      }
      obj[i] = 0;
    }
    if (!advanced) break;
  }
  return found;
}

}  // namespace linsite
