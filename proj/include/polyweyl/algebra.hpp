#pragma once

#include <map>
#include <vector>

#include "polyweyl/heis.hpp"
#include "polyweyl/regions.hpp"
#include "polyweyl/scalar.hpp"

namespace polyweyl {

// Element of the free group *-algebra: a finite complex combination of group
// generators, keyed by canonical (exact-rational) group elements. Zero
// coefficients are never stored, so equality is decidable.
class AlgebraElement {
public:
  explicit AlgebraElement(int n) : n_(n) {
    if (n < 1) throw DomainError("degree bound must be >= 1");
  }

  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement unit(int n) { return generator(identity_element(n)); }
  static AlgebraElement generator(const GroupElement& g, const Complex& coeff = Complex(1));

  int n() const { return n_; }
  const std::map<GroupElement, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement& add_term(const GroupElement& g, const Complex& coeff);
  AlgebraElement scaled(const Complex& s) const;
  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

private:
  int n_;
  std::map<GroupElement, Complex> terms_;
};

// Bilinear extension of the group law to products of generators.
AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y);

// The involution: coefficients conjugated, generators inverted.
AlgebraElement alg_star(const AlgebraElement& x);

// An algebra element tagged with the region it is localized on.
struct LocalizedElement {
  Region region;
  AlgebraElement elem;

  LocalizedElement(Region r, AlgebraElement e) : region(std::move(r)), elem(std::move(e)) {
    if (region.empty()) throw DomainError("localized element requires a nonempty region");
  }
};

// Partition-indexed tensor word: a finite complex combination of elementary
// words, each holding one group generator per cell (cell order = canonical
// partition order). Stored canonically — words sorted by their factor lists,
// duplicates merged, zero coefficients dropped — so equality is decidable.
class TensorElement {
public:
  struct Word {
    Complex coeff;
    std::vector<GroupElement> factors;  // one per cell
  };

  TensorElement(int n, Partition partition)
      : n_(n), partition_(std::move(partition)) {
    if (n < 1) throw DomainError("degree bound must be >= 1");
  }

  static TensorElement unit(int n, const Partition& partition);

  int n() const { return n_; }
  const Partition& partition() const { return partition_; }
  const std::vector<Word>& words() const { return words_; }
  bool is_zero() const { return words_.empty(); }

  TensorElement& add_word(std::vector<GroupElement> factors, const Complex& coeff);
  TensorElement scaled(const Complex& s) const;
  friend TensorElement operator+(const TensorElement& x, const TensorElement& y);
  friend TensorElement operator-(const TensorElement& x, const TensorElement& y);

  friend bool operator==(const TensorElement& x, const TensorElement& y) {
    return x.n_ == y.n_ && x.partition_ == y.partition_ && x.words_ == y.words_;
  }
  friend bool operator!=(const TensorElement& x, const TensorElement& y) { return !(x == y); }

private:
  void canonicalize();

  int n_;
  Partition partition_;
  std::vector<Word> words_;
};

bool operator==(const TensorElement::Word& a, const TensorElement::Word& b);

// Linear extension of the diagonal group embedding g -> (g, ..., g): a unital
// *-homomorphism into the tensor words over the target partition. Note that a
// sum of generators maps to a sum of diagonal words, not to its independent
// tensor power.
TensorElement embed_generator(const Partition& target, const LocalizedElement& w);

// Re-expresses a tensor word on a finer partition by copying each cell's
// factor diagonally into its sub-cells.
TensorElement embed_refine(const TensorElement& t, const Partition& finer);

// Refine both to the common refinement, then multiply cell-by-cell.
TensorElement tensor_mul(const TensorElement& x, const TensorElement& y);

// Cellwise involution with conjugated coefficients.
TensorElement tensor_star(const TensorElement& t);

// Tensor word over the merged partition of two disjointly-supported words.
TensorElement merge_factorize(const TensorElement& ti, const TensorElement& tj);

// Pads the complement with the unit factor, landing on the partition whose
// cells are the original ones plus the complement as a single cell.
TensorElement ambient_embed(const TensorElement& t, const Region& ambient);

// Equality in the inductive system: compare after refining both sides to the
// common refinement of their partitions.
bool equivalent_mod_refinement(const TensorElement& x, const TensorElement& y);

}  // namespace polyweyl
