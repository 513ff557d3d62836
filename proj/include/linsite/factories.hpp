#pragma once

#include <string>
#include <vector>

#include "linsite/category.hpp"

namespace linsite {

struct QuiverArrow {
  std::string name, src, dst;
};

/// Free k-linear category on an acyclic quiver: hom bases are the directed
/// paths, composition is path concatenation. Throws on directed cycles.
CategoryPtr path_category(const Field& f, const std::vector<std::string>& objects,
                          const std::vector<QuiverArrow>& arrows);

/// One object, hom = k . id.
CategoryPtr trivial_category(const Field& f, const std::string& object = "*");

/// One object with basis {id, eps}, eps.eps = 0.
CategoryPtr dual_numbers_category(const Field& f, const std::string& object = "Z");

/// One object with basis {id, s}, s.s = id.
CategoryPtr z2_group_algebra_category(const Field& f, const std::string& object = "G");

/// Replaces each object by the requested number of mutually isomorphic
/// copies ("X~0", "X~1", ...); every hom between copies is the base hom.
CategoryPtr inflate_category(CategoryPtr base, const std::vector<std::size_t>& copies);

}  // namespace linsite
