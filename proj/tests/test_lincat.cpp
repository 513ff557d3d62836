#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linsite/category.hpp"
#include "linsite/factories.hpp"

using namespace linsite;

TEST_CASE("one-object trivial category validates") {
  CategoryPtr c = trivial_category(Field::prime(2));
  CHECK(c->validate().ok);
  CHECK(c->object_count() == 1);
  CHECK(c->hom_dim(0, 0) == 1);
}

TEST_CASE("a broken composition table is rejected with the failing triple") {
  // f: X->Y and g: Y->Z, but g.f is made to disagree between the two
  // association orders by corrupting (g.f).id.
  Field f2 = Field::prime(2);
  LinCategoryBuilder b(f2);
  b.add_object("X").add_object("Y").add_object("Z");
  b.add_hom("X", "X", {"ix"}).add_hom("Y", "Y", {"iy"}).add_hom("Z", "Z", {"iz"});
  b.add_hom("X", "Y", {"f"}).add_hom("Y", "Z", {"g"}).add_hom("X", "Z", {"gf"});
  Scalar one = Scalar::one(f2);
  for (std::string i : {"ix", "iy", "iz"}) b.set_composition(i, i, {{i, one}});
  b.set_composition("f", "ix", {{"f", one}});
  b.set_composition("iy", "f", {{"f", one}});
  b.set_composition("g", "iy", {{"g", one}});
  b.set_composition("iz", "g", {{"g", one}});
  b.set_composition("gf", "ix", {});  // corrupt: should be gf
  b.set_composition("iz", "gf", {{"gf", one}});
  b.set_composition("g", "f", {{"gf", one}});
  b.set_identity_basis("X", "ix").set_identity_basis("Y", "iy").set_identity_basis("Z", "iz");
  auto rep = b.build()->validate();
  CHECK_FALSE(rep.ok);
  CHECK(rep.detail.find("gf") != std::string::npos);
}

TEST_CASE("path category of the quiver X->Y validates; basis triples check out") {
  CategoryPtr c = path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}});
  CHECK(c->validate().ok);
  ObjIndex x = *c->object_index("X"), y = *c->object_index("Y");
  CHECK(c->hom_dim(x, y) == 1);
  CHECK(c->hom_dim(y, x) == 0);
  CHECK(c->hom_dim(x, x) == 1);
  CHECK(path_category(Field::prime(3), {"X", "Y", "Z"},
                      {{"a", "X", "Y"}, {"b", "Y", "Z"}, {"c", "X", "Y"}})
            ->validate()
            .ok);
  CHECK_THROWS_AS(path_category(Field::prime(2), {"X", "Y"}, {{"a", "X", "Y"}, {"b", "Y", "X"}}),
                  DomainError);
}

TEST_CASE("functor validation: identity, corrupted identity image, inclusion") {
  CategoryPtr c = path_category(Field::prime(2), {"X", "Y", "Z"},
                                {{"a", "X", "Y"}, {"b", "Y", "Z"}});
  CHECK(LinFunctor::identity(c).validate().ok);

  // hom map sending id_X to 0
  std::size_t n = c->object_count();
  std::vector<ObjIndex> obj(n);
  std::vector<Matrix> maps(n * n);
  for (ObjIndex i = 0; i < n; ++i) {
    obj[i] = i;
    for (ObjIndex j = 0; j < n; ++j)
      maps[i * n + j] = Matrix::identity(c->field(), c->hom_dim(i, j));
  }
  ObjIndex x = *c->object_index("X");
  maps[x * n + x] = Matrix(c->field(), 1, 1);  // zero map on hom(X,X)
  auto rep = LinFunctor(c, c, obj, maps).validate();
  CHECK_FALSE(rep.ok);
  CHECK(rep.detail.find("identity") != std::string::npos);

  auto sub = full_subcategory(c, {"X", "Y"});
  CHECK(sub.category->validate().ok);
  CHECK(sub.inclusion.validate().ok);
}

TEST_CASE("full subcategory: all objects and the empty selection") {
  CategoryPtr c = path_category(Field::prime(3), {"X", "Y"}, {{"a", "X", "Y"}});
  auto all = full_subcategory(c, {"X", "Y"});
  CHECK(*all.category == *c);
  CHECK(all.inclusion == LinFunctor::identity(c));
  auto none = full_subcategory(c, {});
  CHECK(none.category->object_count() == 0);
  CHECK(none.category->validate().ok);
  CHECK_THROWS_AS(full_subcategory(c, {"missing"}), DomainError);
}

TEST_CASE("functor composition through a full subcategory stays valid") {
  CategoryPtr c = path_category(Field::prime(2), {"X", "Y", "Z"},
                                {{"a", "X", "Y"}, {"b", "Y", "Z"}});
  auto sub = full_subcategory(c, {"X", "Z"});
  LinFunctor composite = compose_functors(LinFunctor::identity(c), sub.inclusion);
  CHECK(composite.validate().ok);
  CHECK(composite == sub.inclusion);
}

TEST_CASE("tensor with the one-object trivial category is the identity on dims") {
  CategoryPtr a = path_category(Field::prime(2), {"X", "Y"}, {{"f", "X", "Y"}});
  CategoryPtr unit = trivial_category(Field::prime(2));
  TensorCategory t = tensor_category(a, unit);
  CHECK(t.category->validate().ok);
  REQUIRE(t.category->object_count() == a->object_count());
  for (ObjIndex i = 0; i < a->object_count(); ++i)
    for (ObjIndex j = 0; j < a->object_count(); ++j)
      CHECK(t.category->hom_dim(t.object_of(i, 0), t.object_of(j, 0)) == a->hom_dim(i, j));
}

TEST_CASE("tensor dims multiply") {
  Field f2 = Field::prime(2);
  CategoryPtr a = path_category(f2, {"X", "Y"}, {{"f", "X", "Y"}, {"g", "X", "Y"}});
  CategoryPtr b = path_category(f2, {"U", "V"}, {{"p", "U", "V"}, {"q", "U", "V"}, {"r", "U", "V"}});
  TensorCategory t = tensor_category(a, b);
  CHECK(t.category->validate().ok);
  ObjIndex x = *a->object_index("X"), y = *a->object_index("Y");
  ObjIndex u = *b->object_index("U"), v = *b->object_index("V");
  CHECK(t.category->hom_dim(t.object_of(x, u), t.object_of(y, v)) == 2 * 3);
}

TEST_CASE("tensor carrier is associative via the re-bracketing functor") {
  Field f2 = Field::prime(2);
  CategoryPtr a = path_category(f2, {"X", "Y"}, {{"f", "X", "Y"}});
  CategoryPtr b = dual_numbers_category(f2);
  CategoryPtr c = path_category(f2, {"U", "V"}, {{"p", "U", "V"}});
  TensorCategory ab = tensor_category(a, b);
  TensorCategory ab_c = tensor_category(ab.category, c);
  TensorCategory bc = tensor_category(b, c);
  TensorCategory a_bc = tensor_category(a, bc.category);
  REQUIRE(ab_c.category->object_count() == a_bc.category->object_count());

  // (a (x) b) (x) c -> a (x) (b (x) c): object ((i,j),l) -> (i,(j,l));
  // on hom bases the map permutes coordinates the same way.
  std::size_t n = ab_c.category->object_count();
  std::vector<ObjIndex> obj(n);
  std::vector<Matrix> maps(n * n);
  auto reindex_obj = [&](ObjIndex t) {
    auto [ij, l] = ab_c.factors(t);
    auto [i, j] = ab.factors(ij);
    return a_bc.object_of(i, bc.object_of(j, l));
  };
  for (ObjIndex t = 0; t < n; ++t) obj[t] = reindex_obj(t);
  for (ObjIndex s = 0; s < n; ++s)
    for (ObjIndex t = 0; t < n; ++t) {
      auto [ij1, l1] = ab_c.factors(s);
      auto [i1, j1] = ab.factors(ij1);
      auto [ij2, l2] = ab_c.factors(t);
      auto [i2, j2] = ab.factors(ij2);
      std::size_t da = a->hom_dim(i1, i2), db = b->hom_dim(j1, j2), dc = c->hom_dim(l1, l2);
      Matrix m(f2, da * db * dc, da * db * dc);
      for (std::size_t fa = 0; fa < da; ++fa)
        for (std::size_t fb = 0; fb < db; ++fb)
          for (std::size_t fc = 0; fc < dc; ++fc) {
            std::size_t src = tensor_basis_index(tensor_basis_index(fa, fb, db), fc, dc);
            std::size_t dst = tensor_basis_index(fa, tensor_basis_index(fb, fc, dc), db * dc);
            m.at(dst, src) = Scalar::one(f2);
          }
      maps[s * n + t] = std::move(m);
    }
  LinFunctor rebracket(ab_c.category, a_bc.category, obj, maps);
  CHECK(rebracket.validate().ok);
  // and it is bijective on objects and hom bases by construction
}

TEST_CASE("enumerate_functors: trivial endpoints") {
  Field f2 = Field::prime(2);
  Bounds bounds;
  CategoryPtr unit = trivial_category(f2);
  CHECK(enumerate_functors(unit, unit, bounds).size() == 1);

  LinCategoryBuilder empty_b(f2);
  CategoryPtr empty = empty_b.build();
  CHECK(enumerate_functors(empty, unit, bounds).size() == 1);
  CHECK(enumerate_functors(empty, empty, bounds).size() == 1);
}

TEST_CASE("enumerate_functors agrees with exhaustive filtering on an arrow category") {
  // a = free arrow category X->Y; any functor into b is a choice of two
  // objects plus an element of hom(FX,FY) (the hom-map image of the arrow),
  // with no further constraint. Oracle: count = sum over object pairs of
  // p^dim hom(FX,FY).
  Field f2 = Field::prime(2);
  Bounds bounds;
  CategoryPtr a = path_category(f2, {"X", "Y"}, {{"f", "X", "Y"}});
  CategoryPtr b = path_category(f2, {"U", "V"}, {{"p", "U", "V"}, {"q", "U", "V"}});
  auto functors = enumerate_functors(a, b, bounds);
  std::size_t expected = 0;
  for (ObjIndex u = 0; u < 2; ++u)
    for (ObjIndex v = 0; v < 2; ++v) {
      std::size_t d = b->hom_dim(u, v);
      expected += static_cast<std::size_t>(1) << d;
    }
  CHECK(functors.size() == expected);
  for (const auto& f : functors) CHECK(f.validate().ok);
  // all enumerated functors are pairwise distinct
  for (std::size_t i = 0; i < functors.size(); ++i)
    for (std::size_t j = i + 1; j < functors.size(); ++j) CHECK_FALSE(functors[i] == functors[j]);
}

TEST_CASE("enumerate_functors respects composition constraints (Z/2 algebra target)") {
  // Functors from the free arrow category to the Z/2 group algebra factor
  // through object choice and an arbitrary image of the arrow: 4 choices of
  // arrow image over F_2 with a single object. Against a source with a
  // relation (dual numbers, eps^2 = 0), images of eps must square to zero.
  Field f2 = Field::prime(2);
  Bounds bounds;
  CategoryPtr dual = dual_numbers_category(f2);
  CategoryPtr z2 = z2_group_algebra_category(f2);
  auto functors = enumerate_functors(dual, z2, bounds);
  // image of eps = x with x^2 = 0 in k[Z/2] over F_2: x in {0, id+s}
  CHECK(functors.size() == 2);
  for (const auto& f : functors) CHECK(f.validate().ok);
}

TEST_CASE("natural transformation solver matches naturality validation") {
  Field f3 = Field::prime(3);
  CategoryPtr a = path_category(f3, {"X", "Y"}, {{"f", "X", "Y"}});
  Bounds bounds;
  auto functors = enumerate_functors(a, a, bounds);
  int checked = 0;
  for (const auto& F : functors)
    for (const auto& G : functors) {
      auto basis = nat_trans_basis(F, G);
      for (const auto& t : basis) CHECK(t.validate().ok);
      // dimension check by brute force: count all component tuples that
      // satisfy naturality
      std::size_t dim_all = 0;
      for (ObjIndex x = 0; x < a->object_count(); ++x)
        dim_all += a->hom_dim(F.map_obj(x), G.map_obj(x));
      std::size_t natural = 0;
      for (const Vec& v : enumerate_vectors(f3, dim_all, bounds)) {
        std::vector<Vec> comps;
        std::size_t off = 0;
        for (ObjIndex x = 0; x < a->object_count(); ++x) {
          std::size_t d = a->hom_dim(F.map_obj(x), G.map_obj(x));
          comps.push_back(v.slice(off, d));
          off += d;
        }
        if (LinNatTrans(F, G, comps).validate().ok) ++natural;
      }
      std::size_t expect = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) expect *= 3;
      CHECK(natural == expect);
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("inflated categories are valid and copies are isomorphic") {
  Field f2 = Field::prime(2);
  CategoryPtr base = path_category(f2, {"X", "Y"}, {{"a", "X", "Y"}});
  CategoryPtr fat = inflate_category(base, {2, 1});
  CHECK(fat->validate().ok);
  CHECK(fat->object_count() == 3);
  ObjIndex x0 = *fat->object_index("X~0"), x1 = *fat->object_index("X~1");
  // the identity coordinates give an isomorphism X~0 -> X~1
  Vec iso = fat->identity(x0);
  REQUIRE(fat->hom_dim(x0, x1) == iso.dim());
  auto inv = fat->inverse_of(x0, x1, iso);
  CHECK(inv.has_value());
}
