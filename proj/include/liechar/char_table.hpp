#pragma once

#include <memory>
#include <vector>

#include "liechar/cyclotomic.hpp"
#include "liechar/group.hpp"

namespace liechar {

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(std::shared_ptr<const ConjugacyData> classes, std::vector<CyclotomicNumber> values);
  static ClassFunction zero(std::shared_ptr<const ConjugacyData> classes);
  static ClassFunction trivial(std::shared_ptr<const ConjugacyData> classes);
  static ClassFunction regular(std::shared_ptr<const ConjugacyData> classes);

  const ConjugacyData& classes() const { return *classes_; }
  const std::shared_ptr<const ConjugacyData>& classes_ptr() const { return classes_; }
  const std::vector<CyclotomicNumber>& values() const { return values_; }
  const CyclotomicNumber& operator[](int c) const { return values_[static_cast<std::size_t>(c)]; }
  const CyclotomicNumber& degree() const { return values_.front(); }
  int size() const { return static_cast<int>(values_.size()); }
  bool is_zero() const;

  ClassFunction& operator+=(const ClassFunction& b);
  ClassFunction& operator-=(const ClassFunction& b);
  ClassFunction& operator*=(const CyclotomicNumber& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const CyclotomicNumber& c) { return a *= c; }
  friend ClassFunction operator*(const CyclotomicNumber& c, ClassFunction a) { return a *= c; }
  // Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

 private:
  void require_same(const ClassFunction& b) const;

  std::shared_ptr<const ConjugacyData> classes_;
  std::vector<CyclotomicNumber> values_;
};

CyclotomicNumber inner_product(const ClassFunction& f, const ClassFunction& g);
ClassFunction dual_character(const ClassFunction& f);
// f o sigma^{-1}
ClassFunction twist_by_automorphism(const ClassFunction& f, const GroupAutomorphism& sigma);

// A function on an explicit subgroup, given by its element list.
struct SubgroupFunction {
  std::shared_ptr<const ConjugacyData> ambient;
  std::vector<ElementId> elements;
  std::vector<CyclotomicNumber> values;  // parallel to elements
};

ClassFunction induce(const SubgroupFunction& psi);
SubgroupFunction restrict_to(const ClassFunction& f, const std::vector<ElementId>& elements);
CyclotomicNumber subgroup_inner_product(const SubgroupFunction& a, const SubgroupFunction& b);

class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const ConjugacyData> classes, std::vector<ClassFunction> irreducibles,
                 std::int64_t modulus);

  const ConjugacyData& classes() const { return *classes_; }
  const std::shared_ptr<const ConjugacyData>& classes_ptr() const { return classes_; }
  int size() const { return static_cast<int>(irr_.size()); }
  const ClassFunction& operator[](int i) const { return irr_[static_cast<std::size_t>(i)]; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  std::vector<long> degrees() const;
  int exponent() const { return classes_->exponent; }
  // The prime used for the modular computation.
  std::int64_t modulus() const { return modulus_; }

  // Index of an irreducible equal to f, or -1.
  int index_of(const ClassFunction& f) const;
  // Multiplicities of f against every irreducible; throws unless all are integers.
  std::vector<long> decompose(const ClassFunction& f) const;
  int dual_index(int i) const { return dual_[static_cast<std::size_t>(i)]; }
  // perm[i] = index of irr[i] o sigma^{-1}
  std::vector<int> twist_permutation(const GroupAutomorphism& sigma) const;

  // Throws InconsistentData unless rows and columns are orthonormal and the degrees square-sum to |G|.
  void verify_orthogonality() const;

 private:
  std::shared_ptr<const ConjugacyData> classes_;
  std::vector<ClassFunction> irr_;
  std::int64_t modulus_;
  std::vector<int> dual_;
};

// Dixon-Schneider: common eigenvectors of the class matrices modulo a prime l = 1 mod e, l > 2|G|,
// lifted to cyclotomic values through the power maps.
CharacterTable character_table(std::shared_ptr<const ConjugacyData> classes);

// Smallest prime l = 1 mod e with l > lower; throws PreconditionFailed naming the bound when none below bound.
std::int64_t splitting_prime(std::int64_t e, std::int64_t lower, std::int64_t bound = std::int64_t(1) << 31);

// N_k = #{g : g iota(g) in class k}
std::vector<std::uint64_t> twisted_square_counts(const GroupAutomorphism& iota);
// (1/|G|) sum_g chi(g iota(g))
CyclotomicNumber twisted_fs_indicator(const ClassFunction& chi, const GroupAutomorphism& iota);
CyclotomicNumber twisted_fs_indicator(const ClassFunction& chi, const std::vector<std::uint64_t>& square_counts);

}  // namespace liechar
