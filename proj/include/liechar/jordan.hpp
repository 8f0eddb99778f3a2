#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liechar/deligne_lusztig.hpp"

namespace liechar {

// One verified (or failed) item of a check, with both sides of the compared equality.
struct CheckItem {
  std::string subject;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

// GL_m(q^d), one per orbit of the label.
struct CentralizerFactor {
  int multiplicity = 0;
  int degree = 0;
  std::int64_t orbit_min = 0;
};

struct DualCentralizer {
  SemisimpleClassLabel label;
  std::vector<CentralizerFactor> factors;  // parallel to label.orbits
  int epsilon_h = 1;
  std::vector<PartitionTuple> torus_types;
  std::vector<PartitionTuple> unipotents;
  // Component group of the adjoint-type centralizer: scalars c with s z_c ~ s, and the orbit permutation each induces.
  std::vector<std::int64_t> component_group{0};
  std::vector<std::vector<int>> component_action;

  // Image of a unipotent tuple under component_group[i].
  PartitionTuple act(std::size_t i, const PartitionTuple& u) const;
};

DualCentralizer dual_centralizer(const GLContext& gl, const SemisimpleClassLabel& s);
// Also fills the component group from the scalar stabilizer.
DualCentralizer dual_centralizer(const SLContext& sl, const SemisimpleClassLabel& gl_label);

// <R^H_tau(1), u_lambda> computed on the realized factor groups.
long unipotent_multiplicity(const DualCentralizer& h, const PartitionTuple& tau, const PartitionTuple& lambda,
                            std::uint64_t budget = kDefaultBudget);

// Frobenius eigenvalue of a unipotent character of a product of GL factors.
CyclotomicNumber frobenius_eigenvalue(const DualCentralizer& h, const PartitionTuple& u);

struct JordanEntry {
  int irr = -1;
  PartitionTuple unipotent;
  std::vector<long> g_vector;  // <R_tau(s), rho> per torus type
  std::vector<long> h_vector;  // <R^H_tau(1), u> per torus type, before the sign
};

struct JordanBijection {
  int series = -1;
  DualCentralizer centralizer;
  int sign = 1;  // eps_G eps_H
  std::vector<JordanEntry> entries;
  // Torus characters checked per torus type.
  std::vector<std::vector<TorusCharacter>> pairs;

  const PartitionTuple& image(int irr) const;
};

// Throws InconsistentData when a multiplicity vector has no match or several.
const JordanBijection& jordan_bijection(const GLContext& gl, int series);

// Relabels a tuple over `from` to one over `to` by sending each orbit through `map` on exponents.
PartitionTuple transport_tuple(const SemisimpleClassLabel& from, const PartitionTuple& t, const SemisimpleClassLabel& to,
                               const std::function<std::int64_t(std::int64_t)>& map);

std::vector<CheckItem> verify_jordan_witnesses(const GLContext& gl);
std::vector<CheckItem> verify_tensor_equivariance(const GLContext& gl);
std::vector<CheckItem> verify_dual_equivariance(const GLContext& gl);
// sigma acts on labels by its dual action (identity or inversion).
std::vector<CheckItem> verify_automorphism_equivariance(const GLContext& gl, const GroupAutomorphism& sigma);

using TupleOrbit = std::vector<PartitionTuple>;  // sorted

struct DisconnectedJordanMap {
  int sl_series = -1;
  int gl_series = -1;
  DualCentralizer centralizer;
  std::vector<int> members;
  std::map<int, TupleOrbit> image;         // SL irreducible -> orbit of unipotent tuples
  std::map<int, std::vector<int>> lifts;   // SL irreducible -> GL members of E(GL, s') above it
  std::vector<TupleOrbit> orbits;          // component-group orbits on Uch(H_0)
  std::vector<std::vector<int>> fibers;    // parallel to orbits
  std::vector<std::vector<int>> adjoint_orbits;
  std::vector<CheckItem> checks;           // fiber, size and sum properties
};

// With enforce, any failed property throws InconsistentData.
DisconnectedJordanMap disconnected_jordan(const SLContext& sl, int series, bool enforce = true);
std::vector<CheckItem> verify_disconnected_jordan(const SLContext& sl);
std::vector<CheckItem> verify_dual_equivariance(const SLContext& sl);
std::vector<CheckItem> verify_automorphism_equivariance(const SLContext& sl, const GroupAutomorphism& sigma);

// rho o iota = rho^vee together with omega(u_rho) in {1, -1}, for every irreducible. Refuses with
// PreconditionFailed when 2 H^1(F, Z) does not vanish.
std::vector<CheckItem> verify_main_theorem(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);
bool two_h1_vanishes(const GroupSpec& spec);

// For SL_2(q): within each Harish-Chandra series, rho o iota = rho^vee o ad(g) forces rho o iota = rho^vee.
std::vector<CheckItem> verify_rigidity(const SLContext& sl);

// (iota(T), theta o iota) is conjugate to (T, theta^{-1}) for every torus and torus character.
std::vector<CheckItem> verify_torus_lemma(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);

std::string orbit_string(const TupleOrbit& o);

}  // namespace liechar
