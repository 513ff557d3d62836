#include "linsite/sieve.hpp"

#include <algorithm>

namespace linsite {

namespace {

int scalar_cmp(const Scalar& a, const Scalar& b) {
  if (a.field().is_prime_field()) {
    if (a.residue() < b.residue()) return -1;
    return a.residue() == b.residue() ? 0 : 1;
  }
  if (a.rational() < b.rational()) return -1;
  return a.rational() == b.rational() ? 0 : 1;
}

int matrix_cmp(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (int c = scalar_cmp(a.at(i, j), b.at(i, j))) return c;
  return 0;
}

}  // namespace

Presheaf::Presheaf(CategoryPtr cat, std::vector<std::size_t> dims,
                   std::vector<std::vector<Matrix>> action)
    : cat_(std::move(cat)), dims_(std::move(dims)), action_(std::move(action)) {
  std::size_t n = cat_->object_count();
  if (dims_.size() != n || action_.size() != n * n)
    throw DomainError("presheaf data has wrong arity");
  for (ObjIndex a = 0; a < n; ++a)
    for (ObjIndex b = 0; b < n; ++b) {
      if (action_[a * n + b].size() != cat_->hom_dim(a, b))
        throw DomainError("presheaf action missing a basis morphism");
      for (const Matrix& m : action_[a * n + b])
        if (m.rows() != dims_[a] || m.cols() != dims_[b])
          throw DomainError("presheaf action matrix has wrong shape");
    }
}

Presheaf Presheaf::representable(CategoryPtr cat, ObjIndex target) {
  std::size_t n = cat->object_count();
  std::vector<std::size_t> dims(n);
  for (ObjIndex a = 0; a < n; ++a) dims[a] = cat->hom_dim(a, target);
  std::vector<std::vector<Matrix>> action(n * n);
  for (ObjIndex a = 0; a < n; ++a)
    for (ObjIndex b = 0; b < n; ++b) {
      std::vector<Matrix> per;
      for (std::size_t fi = 0; fi < cat->hom_dim(a, b); ++fi)
        per.push_back(cat->precompose_map(a, b, target,
                                          Vec::unit(cat->field(), cat->hom_dim(a, b), fi)));
      action[a * n + b] = std::move(per);
    }
  return Presheaf(cat, std::move(dims), std::move(action));
}

Matrix Presheaf::action(ObjIndex a, ObjIndex b, const Vec& f) const {
  Matrix m(cat_->field(), dims_[a], dims_[b]);
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (!f[i].is_zero()) m = m + basis_action(a, b, i).scaled(f[i]);
  return m;
}

ValidationReport Presheaf::validate() const {
  std::size_t n = cat_->object_count();
  for (ObjIndex a = 0; a < n; ++a)
    if (action(a, a, cat_->identity(a)) != Matrix::identity(cat_->field(), dims_[a]))
      return {false, "presheaf action of the identity of '" + cat_->object_name(a) +
                         "' is not the identity"};
  for (ObjIndex a = 0; a < n; ++a)
    for (ObjIndex b = 0; b < n; ++b)
      for (ObjIndex c = 0; c < n; ++c)
        for (std::size_t fi = 0; fi < cat_->hom_dim(a, b); ++fi)
          for (std::size_t gi = 0; gi < cat_->hom_dim(b, c); ++gi) {
            Vec g = Vec::unit(cat_->field(), cat_->hom_dim(b, c), gi);
            Vec f = Vec::unit(cat_->field(), cat_->hom_dim(a, b), fi);
            Matrix lhs = action(a, c, cat_->compose(a, b, c, g, f));
            Matrix rhs = basis_action(a, b, fi) * basis_action(b, c, gi);
            if (lhs != rhs)
              return {false, "presheaf is not functorial on ('" +
                                 cat_->hom_basis_names(b, c)[gi] + "','" +
                                 cat_->hom_basis_names(a, b)[fi] + "')"};
          }
  return {};
}

Sieve::Sieve(CategoryPtr cat, ObjIndex target, std::vector<Subspace> components)
    : cat_(std::move(cat)), target_(target), components_(std::move(components)) {
  if (components_.size() != cat_->object_count())
    throw DomainError("sieve needs one component per object");
  for (ObjIndex a = 0; a < cat_->object_count(); ++a)
    if (components_[a].ambient_dim() != cat_->hom_dim(a, target_))
      throw DomainError("sieve component at '" + cat_->object_name(a) +
                        "' has wrong ambient dimension");
}

Sieve Sieve::maximal(CategoryPtr cat, ObjIndex target) {
  std::vector<Subspace> comps;
  for (ObjIndex a = 0; a < cat->object_count(); ++a)
    comps.push_back(Subspace::full(cat->field(), cat->hom_dim(a, target)));
  return Sieve(cat, target, std::move(comps));
}

Sieve Sieve::zero(CategoryPtr cat, ObjIndex target) {
  std::vector<Subspace> comps;
  for (ObjIndex a = 0; a < cat->object_count(); ++a)
    comps.push_back(Subspace::zero(cat->field(), cat->hom_dim(a, target)));
  return Sieve(cat, target, std::move(comps));
}

bool Sieve::is_maximal() const {
  for (ObjIndex a = 0; a < cat_->object_count(); ++a)
    if (components_[a].dim() != components_[a].ambient_dim()) return false;
  return true;
}

ValidationReport Sieve::check_closure() const {
  std::size_t n = cat_->object_count();
  for (ObjIndex a = 0; a < n; ++a)
    for (std::size_t ri = 0; ri < components_[a].dim(); ++ri) {
      Vec r = components_[a].basis().row(ri);
      for (ObjIndex a2 = 0; a2 < n; ++a2)
        for (std::size_t hi = 0; hi < cat_->hom_dim(a2, a); ++hi) {
          Vec h = Vec::unit(cat_->field(), cat_->hom_dim(a2, a), hi);
          if (!components_[a2].contains(cat_->compose(a2, a, target_, r, h)))
            return {false, "sieve not closed: element " + std::to_string(ri) + " at '" +
                               cat_->object_name(a) + "' precomposed with '" +
                               cat_->hom_basis_names(a2, a)[hi] + "'"};
        }
    }
  return {};
}

bool Sieve::operator==(const Sieve& o) const {
  if (target_ != o.target_ || components_.size() != o.components_.size()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i] != o.components_[i]) return false;
  return true;
}

bool Sieve::contains(const Sieve& o) const {
  if (target_ != o.target_) throw DomainError("sieve containment: target mismatch");
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!components_[i].contains(o.components_[i])) return false;
  return true;
}

Sieve Sieve::intersect(const Sieve& o) const {
  if (target_ != o.target_) throw DomainError("sieve intersection: target mismatch");
  std::vector<Subspace> comps;
  for (std::size_t i = 0; i < components_.size(); ++i)
    comps.push_back(components_[i].intersect(o.components_[i]));
  return Sieve(cat_, target_, std::move(comps));
}

bool Sieve::before(const Sieve& o) const {
  if (target_ != o.target_) return target_ < o.target_;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (int c = matrix_cmp(components_[i].basis(), o.components_[i].basis())) return c < 0;
  return false;
}

Sieve sieve_generated(CategoryPtr cat, ObjIndex target,
                      const std::vector<std::pair<ObjIndex, Vec>>& family) {
  std::size_t n = cat->object_count();
  std::vector<std::vector<Vec>> gens(n);
  for (const auto& [src, v] : family) {
    if (v.dim() != cat->hom_dim(src, target))
      throw DomainError("sieve generator does not live in hom(src, target)");
    gens[src].push_back(v);
  }
  std::vector<Subspace> comps;
  for (ObjIndex a = 0; a < n; ++a)
    comps.push_back(Subspace::span_of(cat->field(), cat->hom_dim(a, target), gens[a]));
  // saturate under precomposition by basis morphisms; bilinearity makes the
  // basis-level fixpoint closed under every morphism
  bool changed = true;
  while (changed) {
    changed = false;
    for (ObjIndex a = 0; a < n; ++a)
      for (std::size_t ri = 0; ri < comps[a].dim(); ++ri) {
        Vec r = comps[a].basis().row(ri);
        for (ObjIndex a2 = 0; a2 < n; ++a2)
          for (std::size_t hi = 0; hi < cat->hom_dim(a2, a); ++hi) {
            Vec rh = cat->compose(a2, a, target, r,
                                  Vec::unit(cat->field(), cat->hom_dim(a2, a), hi));
            if (!comps[a2].contains(rh)) {
              comps[a2] = comps[a2].sum(
                  Subspace::span_of(cat->field(), cat->hom_dim(a2, target), {rh}));
              changed = true;
            }
          }
      }
  }
  return Sieve(cat, target, std::move(comps));
}

Sieve pullback_sieve(const Sieve& r, ObjIndex src, const Vec& g) {
  CategoryPtr cat = r.category();
  if (g.dim() != cat->hom_dim(src, r.target()))
    throw DomainError("pullback morphism does not land in the sieve target");
  std::size_t n = cat->object_count();
  std::vector<Subspace> comps;
  for (ObjIndex a = 0; a < n; ++a) {
    Matrix post = cat->postcompose_map(a, src, r.target(), g);
    comps.push_back(r.component(a).preimage(post));
  }
  Sieve out(cat, src, std::move(comps));
  ValidationReport closure = out.check_closure();
  if (!closure.ok) throw DomainError("pullback sieve lost closure: " + closure.detail);
  return out;
}

NatTransModule hom_from_sieve(const Sieve& r, const Presheaf& f) {
  CategoryPtr cat = r.category();
  if (!(cat == f.category() || *cat == *f.category()))
    throw DomainError("hom_from_sieve: sieve and presheaf live on different categories");
  const Field& k = cat->field();
  std::size_t n = cat->object_count();
  // unknowns: per object a, the matrix eta_a of shape f.dim(a) x rdim(a)
  std::vector<std::size_t> offsets(n + 1, 0);
  for (ObjIndex a = 0; a < n; ++a)
    offsets[a + 1] = offsets[a] + f.dim(a) * r.component(a).dim();
  std::size_t unknowns = offsets[n];
  auto slot = [&](ObjIndex a, std::size_t out, std::size_t rj) {
    return offsets[a] + out * r.component(a).dim() + rj;
  };
  std::vector<Vec> rows;
  for (ObjIndex a = 0; a < n; ++a)
    for (std::size_t ri = 0; ri < r.component(a).dim(); ++ri) {
      Vec rv = r.component(a).basis().row(ri);
      for (ObjIndex a2 = 0; a2 < n; ++a2)
        for (std::size_t hi = 0; hi < cat->hom_dim(a2, a); ++hi) {
          Vec h = Vec::unit(k, cat->hom_dim(a2, a), hi);
          Vec rh = cat->compose(a2, a, r.target(), rv, h);
          Vec rho = r.component(a2).coordinates_of(rh);
          const Matrix& fh = f.basis_action(a2, a, hi);
          // eta_{a2} . rho = F(h) . eta_a(e_ri), one row per output coord
          for (std::size_t out = 0; out < f.dim(a2); ++out) {
            Vec row(k, unknowns);
            for (std::size_t rj = 0; rj < r.component(a2).dim(); ++rj)
              row[slot(a2, out, rj)] = row[slot(a2, out, rj)] + rho[rj];
            for (std::size_t in = 0; in < f.dim(a); ++in)
              row[slot(a, in, ri)] = row[slot(a, in, ri)] - fh.at(out, in);
            rows.push_back(std::move(row));
          }
        }
    }
  Matrix sys = Matrix::from_rows(k, rows, unknowns);
  Matrix ker = nullspace(sys);
  NatTransModule m;
  m.field_ = k;
  m.offsets_ = offsets;
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Vec sol = ker.row(i);
    std::vector<Matrix> fam;
    for (ObjIndex a = 0; a < n; ++a) {
      Matrix eta(k, f.dim(a), r.component(a).dim());
      for (std::size_t out = 0; out < f.dim(a); ++out)
        for (std::size_t rj = 0; rj < r.component(a).dim(); ++rj)
          eta.at(out, rj) = sol[slot(a, out, rj)];
      fam.push_back(std::move(eta));
    }
    m.basis_.push_back(std::move(fam));
    flat.push_back(sol);
  }
  m.span_ = Subspace::span_of(k, unknowns, flat);
  return m;
}

std::optional<Vec> NatTransModule::coordinates_of(const std::vector<Matrix>& family) const {
  std::size_t unknowns = offsets_.back();
  Vec flat(field_, unknowns);
  std::size_t pos = 0;
  for (const Matrix& m : family)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) flat[pos++] = m.at(i, j);
  if (pos != unknowns) throw DomainError("family has wrong total size");
  std::vector<Vec> rows;
  for (const auto& fam : basis_) {
    Vec r(field_, unknowns);
    std::size_t q = 0;
    for (const Matrix& m : fam)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[q++] = m.at(i, j);
    rows.push_back(std::move(r));
  }
  Matrix bt = Matrix::from_rows(field_, rows, unknowns).transposed();
  SolveResult s = solve(bt, flat);
  if (!s.consistent) return std::nullopt;
  return s.particular;
}

Matrix restriction_matrix(const Sieve& r, const Presheaf& f, const NatTransModule& m) {
  CategoryPtr cat = r.category();
  const Field& k = cat->field();
  ObjIndex target = r.target();
  Matrix out(k, m.dim(), f.dim(target));
  for (std::size_t xi = 0; xi < f.dim(target); ++xi) {
    Vec x = Vec::unit(k, f.dim(target), xi);
    std::vector<Matrix> fam;
    for (ObjIndex a = 0; a < cat->object_count(); ++a) {
      Matrix eta(k, f.dim(a), r.component(a).dim());
      for (std::size_t rj = 0; rj < r.component(a).dim(); ++rj) {
        Vec img = f.action(a, target, r.component(a).basis().row(rj)).apply(x);
        for (std::size_t i = 0; i < img.dim(); ++i) eta.at(i, rj) = img[i];
      }
      fam.push_back(std::move(eta));
    }
    auto coords = m.coordinates_of(fam);
    if (!coords)
      throw DomainError("internal: restriction family is not natural");
    for (std::size_t i = 0; i < m.dim(); ++i) out.at(i, xi) = (*coords)[i];
  }
  return out;
}

bool sheaf_condition_holds(const Presheaf& f, const Sieve& r) {
  NatTransModule m = hom_from_sieve(r, f);
  if (m.dim() != f.dim(r.target())) return false;
  Matrix res = restriction_matrix(r, f, m);
  return rref(res).rank == m.dim();
}

Presheaf restrict_presheaf(const LinFunctor& fun, const Presheaf& f) {
  CategoryPtr a = fun.src();
  if (!(fun.dst() == f.category() || *fun.dst() == *f.category()))
    throw DomainError("restrict_presheaf: functor target and presheaf category differ");
  std::size_t n = a->object_count();
  std::vector<std::size_t> dims(n);
  for (ObjIndex x = 0; x < n; ++x) dims[x] = f.dim(fun.map_obj(x));
  std::vector<std::vector<Matrix>> action(n * n);
  for (ObjIndex x = 0; x < n; ++x)
    for (ObjIndex y = 0; y < n; ++y) {
      std::vector<Matrix> per;
      for (std::size_t hi = 0; hi < a->hom_dim(x, y); ++hi) {
        Vec h = Vec::unit(a->field(), a->hom_dim(x, y), hi);
        per.push_back(f.action(fun.map_obj(x), fun.map_obj(y), fun.map_hom(x, y, h)));
      }
      action[x * n + y] = std::move(per);
    }
  return Presheaf(a, std::move(dims), std::move(action));
}

}  // namespace linsite
