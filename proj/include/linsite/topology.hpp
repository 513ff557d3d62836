#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linsite/sieve.hpp"

namespace linsite {

/// Per-object finite sets of covering sieves, kept in a deterministic order.
class CoverSystem {
 public:
  explicit CoverSystem(CategoryPtr cat);

  const CategoryPtr& category() const { return cat_; }
  const std::vector<Sieve>& covers(ObjIndex a) const { return covers_[a]; }
  bool is_cover(const Sieve& s) const;
  /// Inserts preserving order; returns false if already present.
  bool add(const Sieve& s);
  std::size_t total() const;

  bool operator==(const CoverSystem& o) const;

 private:
  CategoryPtr cat_;
  std::vector<std::vector<Sieve>> covers_;
};

struct AxiomViolation {
  std::string axiom;   // "Id" | "Pb" | "Glue"
  std::string detail;
};

struct AxiomCertificate {
  bool id_ok = true, pb_ok = true, glue_ok = true;
  /// True when (Pb) ranged over every morphism and (Glue) over the full
  /// sieve lattice; only attainable over prime fields.
  bool exhaustive = true;
  std::vector<AxiomViolation> violations;
  bool ok() const { return id_ok && pb_ok && glue_ok; }
};

/// Axiom check. Over prime fields (Pb) quantifies over every morphism and
/// (Glue) over the full sieve lattice; over Q only the stored sieves and
/// basis morphisms are examined and the certificate says so.
AxiomCertificate check_axioms(const CoverSystem& s, const Bounds& bounds);

/// A cover system together with a passing axiom certificate.
class Topology {
 public:
  Topology(CoverSystem covers, AxiomCertificate cert);
  static Topology from_cover_system(const CoverSystem& s, const Bounds& bounds);

  const CategoryPtr& category() const { return covers_.category(); }
  const CoverSystem& covers() const { return covers_; }
  const AxiomCertificate& certificate() const { return cert_; }
  bool is_cover(const Sieve& s) const { return covers_.is_cover(s); }

 private:
  CoverSystem covers_;
  AxiomCertificate cert_;
};

struct Site {
  CategoryPtr category;
  Topology topology;
};

/// The full sieve lattice on one object; prime fields only.
std::vector<Sieve> enumerate_sieves(CategoryPtr cat, ObjIndex target, const Bounds& bounds);

/// Least topology containing the system (fixpoint of Id/Pb/Glue
/// saturation over the enumerated lattice); prime fields only.
Topology generate_topology(const CoverSystem& s, const Bounds& bounds);

struct CanonicalTopologyResult {
  Topology topology;
  /// Per excluded sieve: a witnessing (object, morphism, representable)
  /// whose descent condition fails, proving maximality.
  std::vector<std::string> exclusion_witnesses;
};

/// Largest topology whose covers satisfy descent for every representable
/// under every pullback; prime fields only.
CanonicalTopologyResult canonical_topology(CategoryPtr cat, const Bounds& bounds);

struct SheafReport {
  bool is_sheaf = true;
  std::string witness;  // first failing (object, cover) when not a sheaf
};

/// Descent along every stored cover of the system.
SheafReport is_sheaf(const Presheaf& f, const CoverSystem& t);
inline SheafReport is_sheaf(const Presheaf& f, const Topology& t) {
  return is_sheaf(f, t.covers());
}

/// Sieves on the source whose image family generates a cover at the image
/// object; materializes the source lattice, so prime fields only.
CoverSystem induced_topology(const LinFunctor& f, const Topology& tc, const Bounds& bounds);

struct LCReport {
  bool g_ok = true, f_ok = true, ff_ok = true, pullback_ok = true;
  bool exhaustive = true;
  std::string g_witness, f_witness, ff_witness, pullback_witness;
  bool all() const { return g_ok && f_ok && ff_ok && pullback_ok; }
};

/// The four site-morphism conditions for f: (a,T_a) -> (c,T_c).
LCReport check_lc(const LinFunctor& f, const Topology& ta, const Topology& tc,
                  const Bounds& bounds);

struct TensorSite {
  TensorCategory carrier;
  Topology topology;
};

/// Tensor product site: the carrier tensor category with the topology
/// generated by slice covers R (x) max and max (x) S.
TensorSite tensor_site(const Site& left, const Site& right, const Bounds& bounds);
TensorSite tensor_site(CategoryPtr a, const Topology& ta, CategoryPtr b, const Topology& tb,
                       const Bounds& bounds);

struct BimoduleSheafReport {
  bool ok = true;
  std::string witness;  // failing slice
};

/// F(A,-) is a sheaf on (b,T_b) for every A and F(-,B) on (a,T_a) for every B.
BimoduleSheafReport is_bimodule_sheaf(const Presheaf& f, const TensorCategory& carrier,
                                      const Topology& ta, const Topology& tb);

struct TensorLCResult {
  bool preconditions_ok = true;
  std::string precondition_witness;
  LCReport report;  // for f (x) g between the tensor sites
};

/// Builds both tensor sites and checks the site-morphism conditions for
/// f (x) g; callers must pass LC morphisms f and g.
TensorLCResult check_tensor_lc(const LinFunctor& f, const Topology& ta, const Topology& tb,
                               const LinFunctor& g, const Topology& tc, const Topology& td,
                               const Bounds& bounds);

}  // namespace linsite
