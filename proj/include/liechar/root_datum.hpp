#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liechar/integer_matrix.hpp"

namespace liechar {

using LatticeVector = std::vector<long>;

struct BasedRootDatum {
  std::string name;
  int rank = 0;
  std::vector<LatticeVector> roots;    // in X
  std::vector<LatticeVector> coroots;  // in X^vee, coroots[i] pairs with roots[i]
  std::vector<int> simple;             // indices into roots
  std::vector<std::vector<long>> simple_coordinates;  // roots[i] in the basis of simple roots

  // Generates the root system from the simple (co)roots by closing under simple reflections.
  static BasedRootDatum from_simple(std::string name, int rank, const std::vector<LatticeVector>& simple_roots,
                                    const std::vector<LatticeVector>& simple_coroots);
  // "GL1".."GL3", "SL2", "SL3", "PGL2", "PGL3".
  static BasedRootDatum named(std::string_view name);

  static long pairing(const LatticeVector& x, const LatticeVector& y);
  int root_index(const LatticeVector& v) const;
  int coroot_index(const LatticeVector& v) const;
  bool is_positive(int i) const;
  int positive_root_count() const;
  int semisimple_rank() const { return static_cast<int>(simple.size()); }
  // Throws InconsistentData when an axiom fails.
  void validate() const;
  bool same_datum(const BasedRootDatum& other) const;
};

BasedRootDatum dual_datum(const BasedRootDatum& r);

struct WeylGroup {
  std::vector<IntegerMatrix> elements;  // acting on column vectors of X
  std::vector<int> lengths;
  std::vector<IntegerMatrix> simple_reflections;
  int longest = 0;
  const IntegerMatrix& w0() const { return elements[static_cast<std::size_t>(longest)]; }
};

WeylGroup weyl_group(const BasedRootDatum& r);

struct PinnedAutomorphism {
  IntegerMatrix lattice_map;     // on X, acting on column vectors
  std::vector<int> simple_permutation;  // simple i -> simple_permutation[i] (positions in r.simple)
  bool operator==(const PinnedAutomorphism&) const = default;
};

// Checks the map preserves roots, coroots, simple roots and the pairing; throws otherwise.
PinnedAutomorphism make_pinned_automorphism(const BasedRootDatum& r, const IntegerMatrix& lattice_map);
PinnedAutomorphism identity_automorphism(const BasedRootDatum& r);
PinnedAutomorphism chevalley_datum_involution(const BasedRootDatum& r);
// Transpose-inverse read on dual_datum(r).
PinnedAutomorphism dual_automorphism(const BasedRootDatum& r, const PinnedAutomorphism& sigma);

struct FrobeniusDatum {
  long q = 0;
  PinnedAutomorphism automorphism;
  static FrobeniusDatum split(const BasedRootDatum& r, long q);
};

struct CenterComponentGroup {
  std::vector<long> divisors;  // elementary divisors > 1, divisibility-chained
  IntegerMatrix frobenius_action;  // on the generators, entries reduced mod the row divisor
  long order() const;
};

CenterComponentGroup center_component_group(const BasedRootDatum& r, const FrobeniusDatum& f);

struct FrobeniusCohomology {
  std::vector<long> invariant_factors;  // > 1
  long order = 1;
  bool two_h1_vanishes = true;
};

FrobeniusCohomology h1_frobenius(const CenterComponentGroup& z);

}  // namespace liechar
