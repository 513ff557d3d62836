#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linsite/factories.hpp"
#include "linsite/sieve.hpp"

using namespace linsite;

namespace {

// Test-side oracle: every sieve on `target` as a product of subspaces
// filtered by the closure condition. Independent of sieve_generated.
std::vector<Sieve> all_sieves_oracle(CategoryPtr cat, ObjIndex target) {
  Bounds bounds;
  std::size_t n = cat->object_count();
  std::vector<std::vector<Subspace>> lattice;
  for (ObjIndex a = 0; a < n; ++a)
    lattice.push_back(enumerate_subspaces(cat->field(), cat->hom_dim(a, target), bounds));
  std::vector<Sieve> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Subspace> comps;
    for (ObjIndex a = 0; a < n; ++a) comps.push_back(lattice[a][pick[a]]);
    Sieve s(cat, target, comps);
    if (s.check_closure().ok) out.push_back(s);
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (++pick[i] < lattice[i].size()) {
        advanced = true;
        break;
      }
      pick[i] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

Vec random_hom_element(CategoryPtr cat, ObjIndex a, ObjIndex b, std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, cat->field().characteristic() - 1);
  Vec v(cat->field(), cat->hom_dim(a, b));
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] = Scalar::from_int(cat->field(), d(rng));
  return v;
}

}  // namespace

TEST_CASE("representable presheaves validate") {
  for (CategoryPtr cat :
       {path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}}),
        dual_numbers_category(Field::prime(3)),
        path_category(Field::prime(2), {"X", "Y", "Z"}, {{"a", "X", "Y"}, {"b", "Y", "Z"}})})
    for (ObjIndex t = 0; t < cat->object_count(); ++t)
      CHECK(Presheaf::representable(cat, t).validate().ok);
}

TEST_CASE("sieve generated by the identity is maximal; empty family gives zero") {
  CategoryPtr cat = path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}});
  ObjIndex y = *cat->object_index("Y");
  Sieve max = sieve_generated(cat, y, {{y, cat->identity(y)}});
  CHECK(max == Sieve::maximal(cat, y));
  CHECK(max.check_closure().ok);
  Sieve zero = sieve_generated(cat, y, {});
  CHECK(zero == Sieve::zero(cat, y));
}

TEST_CASE("generated sieve is the least closed subfunctor containing the generator") {
  CategoryPtr cat = path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}});
  ObjIndex x = *cat->object_index("X"), y = *cat->object_index("Y");
  Vec a = Vec::unit(cat->field(), cat->hom_dim(x, y), 0);
  Sieve gen = sieve_generated(cat, y, {{x, a}});
  CHECK(gen.check_closure().ok);
  // oracle: smallest element of the full sieve lattice containing a
  bool found_smaller = false;
  int containing = 0;
  for (const Sieve& s : all_sieves_oracle(cat, y)) {
    if (!s.component(x).contains(a)) continue;
    ++containing;
    CHECK(s.contains(gen));
    if (s == gen) continue;
    if (gen.contains(s)) found_smaller = true;
  }
  CHECK(containing > 0);
  CHECK_FALSE(found_smaller);

  // same check on the dual numbers: the sieve generated by eps
  CategoryPtr dual = dual_numbers_category(Field::prime(2));
  Vec eps = Vec::unit(dual->field(), 2, 1);
  Sieve gen_eps = sieve_generated(dual, 0, {{0, eps}});
  CHECK(gen_eps.component(0).dim() == 1);
  for (const Sieve& s : all_sieves_oracle(dual, 0))
    if (s.component(0).contains(eps)) CHECK(s.contains(gen_eps));
}

TEST_CASE("pullback along the identity is the identity; maximal pulls back to maximal") {
  CategoryPtr cat = path_category(Field::prime(3), {"X", "Y"}, {{"a", "X", "Y"}});
  ObjIndex x = *cat->object_index("X"), y = *cat->object_index("Y");
  for (const Sieve& r : all_sieves_oracle(cat, y)) {
    CHECK(pullback_sieve(r, y, cat->identity(y)) == r);
  }
  Vec a = Vec::unit(cat->field(), cat->hom_dim(x, y), 0);
  CHECK(pullback_sieve(Sieve::maximal(cat, y), x, a) == Sieve::maximal(cat, x));
  // pullback along the zero morphism is maximal as well: 0 . f = 0 lies in
  // every subspace
  Vec zero(cat->field(), cat->hom_dim(x, y));
  CHECK(pullback_sieve(Sieve::zero(cat, y), x, zero) == Sieve::maximal(cat, x));
}

TEST_CASE("pullback functoriality (g.h)^{-1} R = h^{-1}(g^{-1} R) on random instances") {
  std::mt19937 rng(424242);
  std::vector<CategoryPtr> cats = {
      path_category(Field::prime(2), {"X", "Y", "Z"}, {{"a", "X", "Y"}, {"b", "Y", "Z"}}),
      dual_numbers_category(Field::prime(2)),
      path_category(Field::prime(3), {"X", "Y"}, {{"a", "X", "Y"}, {"c", "X", "Y"}})};
  for (CategoryPtr cat : cats) {
    std::size_t n = cat->object_count();
    for (int it = 0; it < 30; ++it) {
      std::uniform_int_distribution<std::size_t> od(0, n - 1);
      ObjIndex a = od(rng), b = od(rng), t = od(rng);
      Vec h = random_hom_element(cat, a, b, rng);
      Vec g = random_hom_element(cat, b, t, rng);
      // a randomly generated sieve on t
      std::vector<std::pair<ObjIndex, Vec>> family;
      for (int j = 0; j < 2; ++j) {
        ObjIndex s = od(rng);
        family.emplace_back(s, random_hom_element(cat, s, t, rng));
      }
      Sieve r = sieve_generated(cat, t, family);
      Vec gh = cat->compose(a, b, t, g, h);
      Sieve lhs = pullback_sieve(r, a, gh);
      Sieve rhs = pullback_sieve(pullback_sieve(r, b, g), a, h);
      CHECK(lhs == rhs);
      // monotonicity in the sieve argument
      Sieve bigger = sieve_generated(cat, t, {{t, cat->identity(t)}});
      CHECK(pullback_sieve(bigger, a, gh).contains(lhs));
    }
  }
}

TEST_CASE("hom from the maximal sieve recovers the values of the presheaf") {
  for (CategoryPtr cat :
       {path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}}),
        dual_numbers_category(Field::prime(3))})
    for (ObjIndex t = 0; t < cat->object_count(); ++t) {
      Presheaf rep = Presheaf::representable(cat, t);
      for (ObjIndex A = 0; A < cat->object_count(); ++A) {
        Sieve max = Sieve::maximal(cat, A);
        NatTransModule m = hom_from_sieve(max, rep);
        CHECK(m.dim() == rep.dim(A));
        CHECK(sheaf_condition_holds(rep, max));
      }
    }
}

TEST_CASE("hom from the zero sieve is the zero module") {
  CategoryPtr cat = path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}});
  Presheaf rep = Presheaf::representable(cat, 1);
  NatTransModule m = hom_from_sieve(Sieve::zero(cat, 1), rep);
  CHECK(m.dim() == 0);
}

TEST_CASE("hom_from_sieve matches exhaustive enumeration of natural families") {
  // dual numbers over F_2, sieve generated by eps, representable presheaf
  CategoryPtr dual = dual_numbers_category(Field::prime(2));
  Vec eps = Vec::unit(dual->field(), 2, 1);
  Sieve r = sieve_generated(dual, 0, {{0, eps}});
  Presheaf rep = Presheaf::representable(dual, 0);
  NatTransModule m = hom_from_sieve(r, rep);

  // oracle: enumerate all matrices eta: R(Z) -> F(Z) and keep the natural
  // ones; naturality need only be checked on basis morphisms
  Bounds bounds;
  std::size_t rdim = r.component(0).dim();
  REQUIRE(rdim == 1);
  int natural = 0;
  for (const Vec& img : enumerate_vectors(dual->field(), rep.dim(0), bounds)) {
    bool ok = true;
    for (std::size_t hi = 0; hi < 2 && ok; ++hi) {
      Vec h = Vec::unit(dual->field(), 2, hi);
      Vec rv = r.component(0).basis().row(0);
      Vec rh = dual->compose(0, 0, 0, rv, h);
      Vec rho = r.component(0).coordinates_of(rh);
      // eta(rho) must equal F(h)(img)
      Vec lhs(dual->field(), rep.dim(0));
      lhs.add_scaled(img, rho[0]);
      if (lhs != rep.basis_action(0, 0, hi).apply(img)) ok = false;
    }
    if (ok) ++natural;
  }
  std::size_t expect = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) expect *= 2;
  CHECK(static_cast<std::size_t>(natural) == expect);
  CHECK(m.dim() == 1);
}

TEST_CASE("a presheaf vanishing on the cover of a nonvanishing object fails descent") {
  CategoryPtr cat = path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}});
  ObjIndex x = *cat->object_index("X"), y = *cat->object_index("Y");
  Vec a = Vec::unit(cat->field(), cat->hom_dim(x, y), 0);
  Sieve r = sieve_generated(cat, y, {{x, a}});
  // F(X) = 0, F(Y) = k
  std::size_t n = cat->object_count();
  std::vector<std::size_t> dims(n, 0);
  dims[y] = 1;
  std::vector<std::vector<Matrix>> action(n * n);
  for (ObjIndex s = 0; s < n; ++s)
    for (ObjIndex t = 0; t < n; ++t)
      action[s * n + t].assign(cat->hom_dim(s, t), Matrix(cat->field(), dims[s], dims[t]));
  action[y * n + y][0] = Matrix::identity(cat->field(), 1);
  Presheaf f(cat, dims, action);
  REQUIRE(f.validate().ok);
  CHECK_FALSE(sheaf_condition_holds(f, r));
  CHECK(sheaf_condition_holds(f, Sieve::maximal(cat, y)));
}

TEST_CASE("restriction of scalars: identity, collapse, and functoriality") {
  CategoryPtr cat = path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}});
  Presheaf rep = Presheaf::representable(cat, 1);
  Presheaf same = restrict_presheaf(LinFunctor::identity(cat), rep);
  CHECK(same.validate().ok);
  for (ObjIndex t = 0; t < cat->object_count(); ++t) CHECK(same.dim(t) == rep.dim(t));

  // collapse onto the one-object trivial category
  CategoryPtr unit = trivial_category(Field::prime(2));
  std::size_t n = cat->object_count();
  std::vector<ObjIndex> obj(n, 0);
  std::vector<Matrix> maps(n * n);
  for (ObjIndex s = 0; s < n; ++s)
    for (ObjIndex t = 0; t < n; ++t) {
      Matrix m(cat->field(), 1, cat->hom_dim(s, t));
      for (std::size_t j = 0; j < cat->hom_dim(s, t); ++j) m.at(0, j) = Scalar::one(cat->field());
      maps[s * n + t] = m;
    }
  LinFunctor collapse(cat, unit, obj, maps);
  REQUIRE(collapse.validate().ok);
  Presheaf pulled = restrict_presheaf(collapse, Presheaf::representable(unit, 0));
  CHECK(pulled.validate().ok);
  CHECK(pulled.dim(0) == 1);
  CHECK(pulled.dim(1) == 1);

  // random functor pullbacks stay functorial
  Bounds bounds;
  for (const LinFunctor& f : enumerate_functors(cat, cat, bounds))
    CHECK(restrict_presheaf(f, rep).validate().ok);
}
