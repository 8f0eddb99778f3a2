#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liechar/char_table.hpp"
#include "liechar/group.hpp"
#include "liechar/partitions.hpp"

namespace liechar {

// Semisimple class of GL_n over F_q, as Frobenius orbits of eigenvalues. Eigenvalues are exponents
// of the generator of the splitting field F_Q, so the orbit of x is {x, xq, xq^2, ...} mod Q - 1.
struct SemisimpleClassLabel {
  struct Orbit {
    std::vector<std::int64_t> exponents;  // sorted
    int multiplicity = 0;
    int size() const { return static_cast<int>(exponents.size()); }
    auto operator<=>(const Orbit&) const = default;
  };

  std::int64_t modulus = 1;  // Q - 1
  int q = 0;
  std::vector<Orbit> orbits;  // sorted

  int rank() const;
  // Canonicalizes orbit order and merges equal orbits.
  void normalize();
  SemisimpleClassLabel inverse() const;
  // Multiplication by the scalar with exponent shift (a multiple of (Q-1)/(q-1)).
  SemisimpleClassLabel scaled(std::int64_t shift) const;
  // Position in orbits of the orbit containing exponent x, or -1.
  int orbit_index(std::int64_t x) const;
  std::string canonical() const;
  auto operator<=>(const SemisimpleClassLabel&) const = default;
};

// Every semisimple label of GL_n(q), by enumerating multisets of Frobenius orbits.
std::vector<SemisimpleClassLabel> enumerate_semisimple_labels(const SplittingField& f, int n);

// Character of the torus of class `torus`: theta(prod g_i^{j_i}) = prod zeta_{q^{d_i}-1}^{k_i j_i}.
struct TorusCharacter {
  int torus = 0;
  std::vector<std::int64_t> k;
  auto operator<=>(const TorusCharacter&) const = default;
};

// (-1)^{F-rank}
int epsilon_sign(int f_rank);

// One entry per orbit of a label: the partition attached to it.
using PartitionTuple = std::vector<Partition>;
std::string tuple_string(const PartitionTuple& t);

struct LusztigSeries {
  SemisimpleClassLabel label;
  std::vector<int> members;               // irreducible indices, ascending
  std::vector<TorusCharacter> pairs;      // all torus characters with this label, normal forms
};

// Deligne-Lusztig data for GL_n(q), n <= 3.
class GLContext {
 public:
  // Cached per (spec, twist). The twist u reads theta through y = beta^{u k}; u = 1 is the standard choice.
  static std::shared_ptr<const GLContext> get(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget,
                                              std::int64_t twist = 1);

  const GroupSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  int q() const { return spec_.q; }
  std::int64_t twist() const { return twist_; }
  const std::shared_ptr<const ConjugacyData>& classes() const { return classes_; }
  const CharacterTable& table() const { return *table_; }
  const SplittingField& splitting_field() const { return *field_; }
  const std::vector<TorusClass>& tori() const { return tori_; }
  const TorusEmbedding& torus_embedding(int i) const { return embeddings_[static_cast<std::size_t>(i)]; }
  int epsilon_group() const { return epsilon_sign(n()); }
  int epsilon_torus(int torus) const { return epsilon_sign(tori_[static_cast<std::size_t>(torus)].f_rank); }

  // Unipotent characters: partition -> table index; (n) is trivial, (1^n) Steinberg.
  const std::map<Partition, int>& unipotent_characters() const { return unipotent_; }
  int unipotent_class(const Partition& lambda) const;
  // Q^{GL_n(q)}_{T_mu}(u_lambda)
  long green_function(const Partition& mu, const Partition& lambda) const;

  // All torus characters in W-normal form.
  const std::vector<TorusCharacter>& torus_characters() const { return characters_; }
  TorusCharacter normal_form(TorusCharacter theta) const;
  SemisimpleClassLabel classify_pair(const TorusCharacter& theta) const;
  // Value of theta on the torus element with exponent tuple j.
  CyclotomicNumber torus_value(const TorusCharacter& theta, const std::vector<std::int64_t>& j) const;
  // Torus type of a pair inside the centralizer of its label: one partition per orbit.
  PartitionTuple centralizer_torus_type(const TorusCharacter& theta) const;
  const ClassFunction& dl_character(const TorusCharacter& theta) const;
  // Number of Weyl identifications carrying theta to theta', computed in S_n.
  long exclusion_count(const TorusCharacter& a, const TorusCharacter& b) const;

  const std::vector<LusztigSeries>& series() const { return series_; }
  // Series index of an irreducible.
  int series_of(int irr) const { return series_of_[static_cast<std::size_t>(irr)]; }
  int series_index(const SemisimpleClassLabel& label) const;
  std::int64_t scalar_step() const { return field_->big_unit_order() / (q() - 1); }
  // z-hat = theta o det with theta(g^j) = zeta_{q-1}^{c j}, g the generator of F_q.
  ClassFunction central_linear_character(std::int64_t c) const;
  // Label shift of the scalar z matched to that theta: tensoring by z-hat maps E(G, s) to E(G, sz).
  std::int64_t central_shift(std::int64_t c) const;
  // Number of series containing irreducible i (1 for a partition).
  int membership_count(int irr) const { return membership_[static_cast<std::size_t>(irr)]; }

  // Semisimple part eigenvalues and orbit Jordan types for each class.
  struct ClassDatum {
    std::vector<std::int64_t> eigenvalues;  // of the semisimple part, sorted
    SemisimpleClassLabel label;
    PartitionTuple unipotent_types;  // per orbit of label, Jordan type over F_{q^e}
  };
  const ClassDatum& class_datum(int c) const { return class_data_[static_cast<std::size_t>(c)]; }

 private:
  GLContext(const GroupSpec& spec, std::uint64_t budget, std::int64_t twist);
  void build_class_data();
  void build_unipotents();
  void build_torus_data();
  void build_series();
  ClassFunction compute_dl(const TorusCharacter& theta) const;

  struct TorusElement {
    std::vector<std::int64_t> j;
    std::vector<std::int64_t> eigenvalues;  // sorted
    std::vector<std::int64_t> block_orbit;  // minimal exponent of each block's orbit
    std::vector<int> block_orbit_size;
  };

  GroupSpec spec_;
  std::int64_t twist_;
  std::uint64_t budget_;
  std::shared_ptr<const ConjugacyData> classes_;
  std::shared_ptr<const CharacterTable> table_;
  std::shared_ptr<const SplittingField> field_;
  std::vector<TorusClass> tori_;
  std::vector<TorusEmbedding> embeddings_;
  std::vector<std::vector<TorusElement>> torus_elements_;
  std::vector<ClassDatum> class_data_;
  std::map<Partition, int> unipotent_;
  std::map<Partition, int> unipotent_classes_;
  std::vector<TorusCharacter> characters_;
  mutable std::map<TorusCharacter, ClassFunction> dl_cache_;
  std::vector<LusztigSeries> series_;
  std::vector<int> series_of_;
  std::vector<int> membership_;
};

// Q^{GL_m(Q)}_{T_mu}(u_lambda) with Q = q^e, through realized groups; 1 for m = 1.
long factor_green_function(int m, int q, int e, const Partition& mu, const Partition& lambda, std::uint64_t budget);

// Lusztig series of SL_n(q) by restriction from GL_n(q).
struct SLSeries {
  SemisimpleClassLabel label;     // canonical representative of the scalar orbit of GL labels
  std::vector<int> gl_series;     // GL series indices over this class
  std::vector<int> members;       // SL irreducible indices
};

class SLContext {
 public:
  static std::shared_ptr<const SLContext> get(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget,
                                              std::int64_t twist = 1);

  const GroupSpec& spec() const { return spec_; }
  const GLContext& gl() const { return *gl_; }
  const std::shared_ptr<const ConjugacyData>& classes() const { return classes_; }
  const CharacterTable& table() const { return *table_; }
  // SL class -> GL class
  int gl_class(int c) const { return gl_class_[static_cast<std::size_t>(c)]; }
  ClassFunction restrict_from_gl(const ClassFunction& f) const;
  // restriction[i][j] = <Res chi_i, rho_j>
  const std::vector<std::vector<long>>& restriction() const { return restriction_; }
  const std::vector<SLSeries>& series() const { return series_; }
  int series_of(int irr) const { return series_of_[static_cast<std::size_t>(irr)]; }
  int membership_count(int irr) const { return membership_[static_cast<std::size_t>(irr)]; }
  // Scalars z (as exponents c of the F_q generator, c < q - 1) with z s ~ s.
  std::vector<std::int64_t> scalar_stabilizer(const SemisimpleClassLabel& gl_label) const;
  SemisimpleClassLabel scalar_class(const SemisimpleClassLabel& gl_label) const;

 private:
  SLContext(const GroupSpec& spec, std::uint64_t budget, std::int64_t twist);

  GroupSpec spec_;
  std::shared_ptr<const GLContext> gl_;
  std::shared_ptr<const ConjugacyData> classes_;
  std::shared_ptr<const CharacterTable> table_;
  std::vector<int> gl_class_;
  std::vector<std::vector<long>> restriction_;
  std::vector<SLSeries> series_;
  std::vector<int> series_of_;
  std::vector<int> membership_;
};

// Shared, cached conjugacy data and tables keyed by group spec.
std::shared_ptr<const ConjugacyData> cached_classes(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);
std::shared_ptr<const CharacterTable> cached_table(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);

// Replaces direct table computation in cached_table, e.g. by a persistent cache; empty restores the default.
using TableProvider = std::function<std::shared_ptr<const CharacterTable>(const std::shared_ptr<const ConjugacyData>&)>;
void set_table_provider(TableProvider provider);

}  // namespace liechar
