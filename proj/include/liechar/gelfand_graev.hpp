#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liechar/char_table.hpp"
#include "liechar/jordan.hpp"

namespace liechar {

// psi(u) = zeta_p^{Tr(sum_i a_i u_{i,i+1})} on the upper unitriangular group.
class WhittakerDatum {
 public:
  // Throws InvalidArgument when some a_i = 0 (degenerate) or the tuple has the wrong length.
  WhittakerDatum(std::shared_ptr<const ConjugacyData> classes, std::vector<int> functional);

  const std::shared_ptr<const ConjugacyData>& classes() const { return classes_; }
  const std::vector<int>& functional() const { return functional_; }
  // Parallel to group().unipotent().
  const std::vector<CyclotomicNumber>& values() const { return values_; }
  WhittakerDatum inverse() const;
  // The pinning with psi(x_i(c_i t)) = zeta_p^{Tr(kappa t)} for every i, kappa the smallest code of trace 1.
  Pinning pinning() const;
  std::string descriptor() const;
  bool operator==(const WhittakerDatum& b) const { return classes_ == b.classes_ && functional_ == b.functional_; }

 private:
  std::shared_ptr<const ConjugacyData> classes_;
  std::vector<int> functional_;
  std::vector<CyclotomicNumber> values_;
};

// Every nondegenerate functional.
std::vector<std::vector<int>> nondegenerate_functionals(const GroupRealization& g);
// Smallest functional in the split-torus orbit of a.
std::vector<int> torus_orbit_representative(const GroupRealization& g, const std::vector<int>& a);
// One datum per split-torus orbit, ordered by representative.
std::vector<WhittakerDatum> whittaker_data(std::shared_ptr<const ConjugacyData> classes);

ClassFunction gelfand_graev(const WhittakerDatum& psi);

struct GenericDecomposition {
  ClassFunction gamma;
  std::vector<long> multiplicities;
  // Per series, the unique generic member.
  std::vector<int> generic;
};

// Series given as member lists; throws InconsistentData unless Gamma is multiplicity-free with exactly one
// constituent in each series.
GenericDecomposition decompose_gelfand_graev(const WhittakerDatum& psi, const CharacterTable& table,
                                             const std::vector<std::vector<int>>& series);
int generic_constituent(const GenericDecomposition& d, int series);

// Gamma_psi o iota = Gamma_{psi^-1} and gamma_{s,psi} o iota = gamma_{s,psi}^vee for every datum and label,
// with iota pinned by psi.
std::vector<CheckItem> verify_generic_duality(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);

}  // namespace liechar
