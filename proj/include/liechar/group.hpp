#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "liechar/finite_field.hpp"

namespace liechar {

constexpr std::uint64_t kDefaultBudget = 1'000'000;

enum class Family { GL, SL };

struct GroupSpec {
  Family family = Family::GL;
  int n = 1;
  int q = 2;

  // FAMILY RANK '(' q ')', for example "GL2(3)" or "SL3(4)".
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;
  std::uint64_t order() const;
  GroupSpec with_family(Family f) const { return {f, n, q}; }
  auto operator<=>(const GroupSpec&) const = default;
};

using ElementId = std::int32_t;

// n x n matrix over F_q (n <= 3), entries are field codes, stored with row stride 3.
struct Matrix {
  std::array<std::uint8_t, 9> a{};
  int at(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }
  void set(int i, int j, int v) { a[static_cast<std::size_t>(3 * i + j)] = static_cast<std::uint8_t>(v); }
  bool operator==(const Matrix&) const = default;
};

class MatrixAlgebra {
 public:
  MatrixAlgebra(std::shared_ptr<const FiniteField> field, int n);

  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  int n() const { return n_; }

  Matrix identity() const;
  Matrix scalar(int c) const;
  Matrix diagonal(const std::vector<int>& d) const;
  Matrix elementary(int i, int j, int c) const;  // I + c E_ij
  Matrix mul(const Matrix& x, const Matrix& y) const;
  Matrix add(const Matrix& x, const Matrix& y) const;
  Matrix sub(const Matrix& x, const Matrix& y) const;
  Matrix scale(const Matrix& x, int c) const;
  Matrix transpose(const Matrix& x) const;
  Matrix power(const Matrix& x, std::int64_t e) const;
  // Throws when singular.
  Matrix inverse(const Matrix& x) const;
  int det(const Matrix& x) const;
  int rank(const Matrix& x) const;
  // Rank of a list of rows of length n.
  int rank_rows(std::vector<std::vector<int>> rows) const;
  // Evaluates the polynomial with F_q coefficients (constant term first) at x.
  Matrix evaluate(const std::vector<int>& poly, const Matrix& x) const;
  std::uint64_t code(const Matrix& x) const;
  Matrix from_code(std::uint64_t c) const;
  std::string to_string(const Matrix& x) const;

 private:
  std::shared_ptr<const FiniteField> field_;
  int n_;
  int q_;
  std::vector<std::uint8_t> add_, mul_;
};

struct Pinning {
  std::vector<int> coefficients;  // x_{alpha_i}(c_i) = I + c_i E_{i,i+1}
  std::vector<Matrix> generators(const MatrixAlgebra& alg) const;
};

class GroupRealization {
 public:
  static std::shared_ptr<const GroupRealization> build(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);

  const GroupSpec& spec() const { return spec_; }
  std::string name() const { return spec_.to_string(); }
  int n() const { return spec_.n; }
  int q() const { return spec_.q; }
  const FiniteField& field() const { return algebra_.field(); }
  const MatrixAlgebra& algebra() const { return algebra_; }

  std::size_t order() const { return elements_.size(); }
  const Matrix& element(ElementId id) const { return elements_[static_cast<std::size_t>(id)]; }
  // -1 when the matrix is not in the group.
  ElementId find(const Matrix& m) const;
  ElementId identity() const { return identity_; }
  ElementId mul(ElementId x, ElementId y) const;
  ElementId inverse(ElementId x) const { return inverse_[static_cast<std::size_t>(x)]; }
  ElementId power(ElementId x, std::int64_t e) const;
  int element_order(ElementId x) const;

  const std::vector<ElementId>& borel() const { return borel_; }
  const std::vector<ElementId>& split_torus() const { return torus_; }
  const std::vector<ElementId>& unipotent() const { return unipotent_; }
  bool in_borel(const Matrix& m) const;
  bool in_unipotent(const Matrix& m) const;
  bool in_split_torus(const Matrix& m) const;

  // Generators used for orbit computations: root elements over an F_p-basis and a diagonal generator.
  const std::vector<Matrix>& generators() const { return generators_; }
  const Pinning& standard_pinning() const { return pinning_; }
  // Rejects pinnings whose generators are not simple root elements normalized by T_0.
  void validate_pinning(const Pinning& p) const;

 private:
  GroupRealization(const GroupSpec& spec, std::shared_ptr<const FiniteField> field);

  GroupSpec spec_;
  MatrixAlgebra algebra_;
  std::vector<Matrix> elements_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> dense_index_;
  ElementId identity_ = 0;
  std::vector<ElementId> borel_, torus_, unipotent_;
  std::vector<Matrix> generators_;
  Pinning pinning_;
};

struct ConjugacyData {
  std::shared_ptr<const GroupRealization> group;
  std::vector<ElementId> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<int> class_of;  // per element
  std::vector<int> orders;    // element order per class
  // power_maps[c][m] = class of rep_c^m for m in [0, orders[c])
  std::vector<std::vector<int>> power_maps;
  std::vector<int> inverse_class;
  std::uint64_t group_order = 0;
  int exponent = 1;

  int class_count() const { return static_cast<int>(representatives.size()); }
  std::uint64_t centralizer_order(int c) const { return group_order / sizes[static_cast<std::size_t>(c)]; }
  int class_of_element(ElementId x) const { return class_of[static_cast<std::size_t>(x)]; }
  int power_class(int c, std::int64_t m) const;
  std::string name() const { return group->name(); }
  // Stable text encoding of representatives, sizes and power maps.
  std::string canonical_text() const;
};

std::shared_ptr<const ConjugacyData> conjugacy_classes(std::shared_ptr<const GroupRealization> g);

enum class LabelAction { Identity, Inversion };

class GroupAutomorphism {
 public:
  using Formula = std::function<Matrix(const Matrix&)>;

  // Builds the element table from the formula and validates bijectivity and the homomorphism property.
  GroupAutomorphism(std::shared_ptr<const ConjugacyData> classes, std::string name, LabelAction dual_action,
                    Formula formula);

  const std::string& name() const { return name_; }
  LabelAction dual_action() const { return dual_action_; }
  const ConjugacyData& classes() const { return *classes_; }
  std::shared_ptr<const ConjugacyData> classes_ptr() const { return classes_; }
  ElementId apply(ElementId x) const { return image_[static_cast<std::size_t>(x)]; }
  int apply_class(int c) const { return class_perm_[static_cast<std::size_t>(c)]; }
  const std::vector<int>& class_permutation() const { return class_perm_; }
  Matrix apply_matrix(const Matrix& m) const { return formula_(m); }

  bool is_involution() const;
  bool is_identity() const;
  GroupAutomorphism inverse() const;
  // (a o b)(x) = a(b(x))
  static GroupAutomorphism compose(const GroupAutomorphism& a, const GroupAutomorphism& b);

 private:
  GroupAutomorphism() = default;

  std::shared_ptr<const ConjugacyData> classes_;
  std::string name_;
  LabelAction dual_action_ = LabelAction::Identity;
  Formula formula_;
  std::vector<ElementId> image_;
  std::vector<int> class_perm_;
};

GroupAutomorphism identity_automorphism(std::shared_ptr<const ConjugacyData> classes);
// Conjugation x -> g x g^{-1} by an invertible matrix normalizing the group.
GroupAutomorphism conjugation_automorphism(std::shared_ptr<const ConjugacyData> classes, const Matrix& g,
                                           std::string name);
GroupAutomorphism chevalley_involution(std::shared_ptr<const ConjugacyData> classes, const Pinning& pinning);
GroupAutomorphism duality_involution(std::shared_ptr<const ConjugacyData> classes, const Pinning& pinning);
std::vector<GroupAutomorphism> adjoint_action_representatives(std::shared_ptr<const ConjugacyData> classes);
// Diagonal matrix D with D_i / D_{i+1} = c_i, carrying the standard pinning to the given one.
Matrix pinning_transport(const MatrixAlgebra& alg, const Pinning& pinning);

struct TorusClass {
  std::vector<int> cycle_type;           // cycle lengths of w, descending
  std::vector<int> weyl_representative;  // permutation of {0..n-1}
  std::uint64_t order = 0;
  std::vector<std::int64_t> factor_orders;  // q^{d_i} - 1, the cyclic factors of the GL_n torus
  bool determinant_one = false;             // SL_n: kernel of the product of norms
  int f_rank = 0;
  std::string label() const;
};

std::vector<TorusClass> maximal_tori(const GroupRealization& g);
// |det(q w - 1)| on the cocharacter lattice, computed from the lattice action of w.
std::uint64_t torus_order_from_lattice(Family family, int n, int q, const std::vector<int>& permutation);

// F_Q with Q = q^L, L = lcm(1..n): every eigenvalue of an element of GL_n(q) lives here.
class SplittingField {
 public:
  SplittingField(std::shared_ptr<const FiniteField> base, int n);

  const FiniteField& base() const { return embedding_.small(); }
  const FiniteField& big() const { return embedding_.big(); }
  const FieldEmbedding& embedding() const { return embedding_; }
  int degree() const { return degree_; }
  std::int64_t big_unit_order() const { return big().order() - 1; }
  // Exponent E with G^E generating F_{q^d}^x, G the big field generator.
  std::int64_t subfield_step(int d) const;
  // The orbit {y, y^q, ...} of log_G(y) = exponent.
  std::vector<std::int64_t> frobenius_orbit(std::int64_t exponent) const;
  // Minimal polynomial over F_q (base codes, constant term first) of G^exponent.
  std::vector<int> minimal_polynomial(std::int64_t exponent) const;
  // Eigenvalue exponents of a matrix over F_q, with multiplicity, sorted.
  std::vector<std::int64_t> eigenvalue_exponents(const MatrixAlgebra& alg, const Matrix& m) const;

 private:
  FieldEmbedding embedding_;
  int degree_;
};

// Explicit matrices for the GL_n torus of a class: block diagonal powers of companion matrices.
struct TorusEmbedding {
  TorusClass torus;
  std::vector<std::int64_t> factor_steps;    // subfield_step(d_i)
  std::vector<int> block_offsets;
  std::vector<Matrix> factor_generators;     // each a generator of one cyclic factor, identity elsewhere
  // Element of the group for an exponent tuple, -1 when outside (SL filter).
  ElementId element(const GroupRealization& g, const std::vector<std::int64_t>& exponents) const;
};

TorusEmbedding embed_torus(const GroupRealization& g, const SplittingField& f, const TorusClass& t);

}  // namespace liechar
