#include "linsite/factories.hpp"

#include <algorithm>
#include <map>

namespace linsite {

CategoryPtr path_category(const Field& f, const std::vector<std::string>& objects,
                          const std::vector<QuiverArrow>& arrows) {
  std::map<std::string, std::size_t> oidx;
  for (const auto& o : objects) {
    if (oidx.count(o)) throw DomainError("duplicate quiver object '" + o + "'");
    oidx[o] = oidx.size();
  }
  for (const auto& ar : arrows)
    if (!oidx.count(ar.src) || !oidx.count(ar.dst))
      throw DomainError("quiver arrow '" + ar.name + "' references unknown object");

  // path = list of arrow indices applied right-to-left; grown by BFS on length
  struct Path {
    std::string name, src, dst;
    std::vector<std::size_t> arcs;
  };
  std::vector<Path> paths;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    paths.push_back({arrows[i].name, arrows[i].src, arrows[i].dst, {i}});
  std::size_t frontier_begin = 0;
  const std::size_t kPathCap = 4096;
  while (frontier_begin < paths.size()) {
    std::size_t frontier_end = paths.size();
    for (std::size_t pi = frontier_begin; pi < frontier_end; ++pi)
      for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
        if (arrows[ai].src != paths[pi].dst) continue;
        Path ext{arrows[ai].name + "*" + paths[pi].name, paths[pi].src, arrows[ai].dst,
                 paths[pi].arcs};
        ext.arcs.push_back(ai);
        if (ext.src == ext.dst || ext.arcs.size() > objects.size())
          throw DomainError("quiver has a directed cycle; its path category is infinite");
        paths.push_back(std::move(ext));
        if (paths.size() > kPathCap) throw DomainError("path category too large");
      }
    frontier_begin = frontier_end;
  }

  LinCategoryBuilder builder(f);
  for (const auto& o : objects) builder.add_object(o);
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> basis;
  for (const auto& o : objects) basis[{o, o}].push_back("id_" + o);
  for (const auto& p : paths) basis[{p.src, p.dst}].push_back(p.name);
  for (const auto& s : objects)
    for (const auto& d : objects) {
      auto it = basis.find({s, d});
      builder.add_hom(s, d, it == basis.end() ? std::vector<std::string>{} : it->second);
    }
  for (const auto& o : objects) builder.set_identity_basis(o, "id_" + o);

  Scalar one = Scalar::one(f);
  auto path_name = [&](const Path& a) { return a.name; };
  // identity compositions
  for (const auto& p : paths) {
    builder.set_composition(p.name, "id_" + p.src, {{p.name, one}});
    builder.set_composition("id_" + p.dst, p.name, {{p.name, one}});
  }
  for (const auto& o : objects)
    builder.set_composition("id_" + o, "id_" + o, {{"id_" + o, one}});
  // concatenation
  for (const auto& q : paths)
    for (const auto& p : paths) {
      if (p.dst != q.src) continue;
      std::vector<std::size_t> arcs = p.arcs;
      arcs.insert(arcs.end(), q.arcs.begin(), q.arcs.end());
      auto match = std::find_if(paths.begin(), paths.end(),
                                [&](const Path& r) { return r.arcs == arcs; });
      if (match == paths.end()) throw DomainError("internal: missing concatenated path");
      builder.set_composition(q.name, p.name, {{path_name(*match), one}});
    }
  return builder.build();
}

CategoryPtr trivial_category(const Field& f, const std::string& object) {
  LinCategoryBuilder b(f);
  std::string id = "id_" + object;
  b.add_object(object).add_hom(object, object, {id});
  b.set_composition(id, id, {{id, Scalar::one(f)}});
  b.set_identity_basis(object, id);
  return b.build();
}

CategoryPtr dual_numbers_category(const Field& f, const std::string& object) {
  LinCategoryBuilder b(f);
  std::string id = "id_" + object, eps = "eps_" + object;
  b.add_object(object).add_hom(object, object, {id, eps});
  Scalar one = Scalar::one(f);
  b.set_composition(id, id, {{id, one}});
  b.set_composition(id, eps, {{eps, one}});
  b.set_composition(eps, id, {{eps, one}});
  b.set_composition(eps, eps, {});
  b.set_identity_basis(object, id);
  return b.build();
}

CategoryPtr z2_group_algebra_category(const Field& f, const std::string& object) {
  LinCategoryBuilder b(f);
  std::string id = "id_" + object, s = "s_" + object;
  b.add_object(object).add_hom(object, object, {id, s});
  Scalar one = Scalar::one(f);
  b.set_composition(id, id, {{id, one}});
  b.set_composition(id, s, {{s, one}});
  b.set_composition(s, id, {{s, one}});
  b.set_composition(s, s, {{id, one}});
  b.set_identity_basis(object, id);
  return b.build();
}

CategoryPtr inflate_category(CategoryPtr base, const std::vector<std::size_t>& copies) {
  if (copies.size() != base->object_count())
    throw DomainError("inflate_category: one multiplicity per object required");
  const Field& f = base->field();
  LinCategoryBuilder b(f);
  struct Copy {
    ObjIndex base_obj;
    std::size_t copy;
    std::string name;
  };
  std::vector<Copy> objs;
  for (ObjIndex i = 0; i < base->object_count(); ++i) {
    if (copies[i] == 0) throw DomainError("inflate_category: zero multiplicity");
    for (std::size_t c = 0; c < copies[i]; ++c) {
      objs.push_back({i, c, base->object_name(i) + "~" + std::to_string(c)});
      b.add_object(objs.back().name);
    }
  }
  auto suffix = [](const std::string& base_name, const Copy& x, const Copy& y) {
    return base_name + "~" + std::to_string(x.copy) + "~" + std::to_string(y.copy) + "@" +
           y.name + "|" + x.name;
  };
  // distinct hom pairs need globally distinct basis names; the copy pair and
  // object names disambiguate
  for (const auto& x : objs)
    for (const auto& y : objs) {
      std::vector<std::string> names;
      for (const auto& n : base->hom_basis_names(x.base_obj, y.base_obj))
        names.push_back(suffix(n, x, y));
      b.add_hom(x.name, y.name, names);
    }
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& z : objs)
        for (std::size_t gi = 0; gi < base->hom_dim(y.base_obj, z.base_obj); ++gi)
          for (std::size_t fi = 0; fi < base->hom_dim(x.base_obj, y.base_obj); ++fi) {
            const Vec& res = base->comp_const(x.base_obj, y.base_obj, z.base_obj, gi, fi);
            std::map<std::string, Scalar> coords;
            for (std::size_t r = 0; r < res.dim(); ++r)
              if (!res[r].is_zero())
                coords[suffix(base->hom_basis_names(x.base_obj, z.base_obj)[r], x, z)] = res[r];
            b.set_composition(suffix(base->hom_basis_names(y.base_obj, z.base_obj)[gi], y, z),
                              suffix(base->hom_basis_names(x.base_obj, y.base_obj)[fi], x, y),
                              coords);
          }
  for (const auto& x : objs) {
    const Vec& id = base->identity(x.base_obj);
    std::map<std::string, Scalar> coords;
    for (std::size_t r = 0; r < id.dim(); ++r)
      if (!id[r].is_zero())
        coords[suffix(base->hom_basis_names(x.base_obj, x.base_obj)[r], x, x)] = id[r];
    b.set_identity(x.name, coords);
  }
  return b.build();
}

}  // namespace linsite
