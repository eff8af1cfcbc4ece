#include "polyweyl/algebra.hpp"

#include <algorithm>

namespace polyweyl {

AlgebraElement AlgebraElement::generator(const GroupElement& g, const Complex& coeff) {
  AlgebraElement x(g.n);
  x.add_term(g, coeff);
  return x;
}

AlgebraElement& AlgebraElement::add_term(const GroupElement& g, const Complex& coeff) {
  if (g.n != n_) throw DomainError("algebra term: degree bounds differ");
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) it->second += coeff;
  if (it->second == Complex(0)) terms_.erase(it);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Complex& s) const {
  AlgebraElement r(n_);
  if (s == Complex(0)) return r;
  for (const auto& [g, c] : terms_) r.add_term(g, c * s);
  return r;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n_ != y.n_) throw DomainError("algebra sum: degree bounds differ");
  AlgebraElement r = x;
  for (const auto& [g, c] : y.terms_) r.add_term(g, c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  return x + y.scaled(Complex(-1));
}

AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n() != y.n()) throw DomainError("algebra product: degree bounds differ");
  AlgebraElement r(x.n());
  for (const auto& [g, cg] : x.terms())
    for (const auto& [h, ch] : y.terms()) r.add_term(compose(g, h), cg * ch);
  return r;
}

AlgebraElement alg_star(const AlgebraElement& x) {
  AlgebraElement r(x.n());
  for (const auto& [g, c] : x.terms()) r.add_term(inverse(g), std::conj(c));
  return r;
}

bool operator==(const TensorElement::Word& a, const TensorElement::Word& b) {
  return a.coeff == b.coeff && a.factors == b.factors;
}

namespace {

bool factors_less(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

TensorElement TensorElement::unit(int n, const Partition& partition) {
  TensorElement t(n, partition);
  t.add_word(std::vector<GroupElement>(partition.cells().size(), identity_element(n)),
             Complex(1));
  return t;
}

TensorElement& TensorElement::add_word(std::vector<GroupElement> factors, const Complex& coeff) {
  if (static_cast<int>(factors.size()) != partition_.size())
    throw DomainError("tensor word needs exactly one factor per cell");
  for (const GroupElement& g : factors)
    if (g.n != n_) throw DomainError("tensor word factor: degree bounds differ");
  words_.push_back({coeff, std::move(factors)});
  canonicalize();
  return *this;
}

void TensorElement::canonicalize() {
  std::sort(words_.begin(), words_.end(),
            [](const Word& a, const Word& b) { return factors_less(a.factors, b.factors); });
  std::vector<Word> merged;
  for (Word& w : words_) {
    if (!merged.empty() && merged.back().factors == w.factors)
      merged.back().coeff += w.coeff;
    else
      merged.push_back(std::move(w));
    if (merged.back().coeff == Complex(0)) merged.pop_back();
  }
  words_ = std::move(merged);
}

TensorElement TensorElement::scaled(const Complex& s) const {
  TensorElement r(n_, partition_);
  if (s == Complex(0)) return r;
  for (const Word& w : words_) r.words_.push_back({w.coeff * s, w.factors});
  return r;
}

TensorElement operator+(const TensorElement& x, const TensorElement& y) {
  if (x.n_ != y.n_) throw DomainError("tensor sum: degree bounds differ");
  if (x.partition_ != y.partition_) throw DomainError("tensor sum: partitions differ");
  TensorElement r = x;
  r.words_.insert(r.words_.end(), y.words_.begin(), y.words_.end());
  r.canonicalize();
  return r;
}

TensorElement operator-(const TensorElement& x, const TensorElement& y) {
  return x + y.scaled(Complex(-1));
}

TensorElement embed_generator(const Partition& target, const LocalizedElement& w) {
  if (w.region != target.of())
    throw DomainError("embedding: element region differs from partition region");
  TensorElement t(w.elem.n(), target);
  const std::size_t cells = target.cells().size();
  for (const auto& [g, c] : w.elem.terms())
    t.add_word(std::vector<GroupElement>(cells, g), c);
  return t;
}

TensorElement embed_refine(const TensorElement& t, const Partition& finer) {
  if (!is_refinement(finer, t.partition()))
    throw DomainError("embedding: target partition is not a refinement");
  // Locate, for each fine cell, the coarse cell containing it.
  std::vector<std::size_t> coarse_of;
  for (const Region& fc : finer.cells()) {
    std::size_t found = t.partition().cells().size();
    for (std::size_t i = 0; i < t.partition().cells().size(); ++i)
      if (t.partition().cells()[i].contains(fc)) { found = i; break; }
    if (found == t.partition().cells().size())
      throw DomainError("embedding: fine cell not contained in any coarse cell");
    coarse_of.push_back(found);
  }
  TensorElement r(t.n(), finer);
  for (const TensorElement::Word& w : t.words()) {
    std::vector<GroupElement> factors;
    factors.reserve(coarse_of.size());
    for (std::size_t j : coarse_of) factors.push_back(w.factors[j]);
    r.add_word(std::move(factors), w.coeff);
  }
  return r;
}

TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) {
  if (x.n() != y.n()) throw DomainError("tensor product: degree bounds differ");
  if (x.partition().of() != y.partition().of())
    throw DomainError("tensor product: regions differ");
  const Partition common = common_refinement(x.partition(), y.partition());
  const TensorElement xr = embed_refine(x, common);
  const TensorElement yr = embed_refine(y, common);
  TensorElement r(x.n(), common);
  for (const TensorElement::Word& a : xr.words())
    for (const TensorElement::Word& b : yr.words()) {
      std::vector<GroupElement> factors;
      factors.reserve(a.factors.size());
      for (std::size_t j = 0; j < a.factors.size(); ++j)
        factors.push_back(compose(a.factors[j], b.factors[j]));
      r.add_word(std::move(factors), a.coeff * b.coeff);
    }
  return r;
}

TensorElement tensor_star(const TensorElement& t) {
  TensorElement r(t.n(), t.partition());
  for (const TensorElement::Word& w : t.words()) {
    std::vector<GroupElement> factors;
    factors.reserve(w.factors.size());
    for (const GroupElement& g : w.factors) factors.push_back(inverse(g));
    r.add_word(std::move(factors), std::conj(w.coeff));
  }
  return r;
}

TensorElement merge_factorize(const TensorElement& ti, const TensorElement& tj) {
  if (ti.n() != tj.n()) throw DomainError("merge: degree bounds differ");
  const Partition merged = merge_partitions(ti.partition(), tj.partition());
  // Map each source cell to its slot in the merged (re-sorted) cell list.
  auto slots = [&merged](const Partition& p) {
    std::vector<std::size_t> s;
    for (const Region& cell : p.cells()) {
      std::size_t found = merged.cells().size();
      for (std::size_t i = 0; i < merged.cells().size(); ++i)
        if (merged.cells()[i] == cell) { found = i; break; }
      if (found == merged.cells().size())
        throw DomainError("merge: cell lost while merging partitions");
      s.push_back(found);
    }
    return s;
  };
  const std::vector<std::size_t> si = slots(ti.partition());
  const std::vector<std::size_t> sj = slots(tj.partition());
  TensorElement r(ti.n(), merged);
  for (const TensorElement::Word& a : ti.words())
    for (const TensorElement::Word& b : tj.words()) {
      std::vector<GroupElement> factors(merged.cells().size(), identity_element(ti.n()));
      for (std::size_t k = 0; k < si.size(); ++k) factors[si[k]] = a.factors[k];
      for (std::size_t k = 0; k < sj.size(); ++k) factors[sj[k]] = b.factors[k];
      r.add_word(std::move(factors), a.coeff * b.coeff);
    }
  return r;
}

TensorElement ambient_embed(const TensorElement& t, const Region& ambient) {
  const Region inner = t.partition().of();
  if (!ambient.contains(inner)) throw DomainError("ambient embedding: not a superset");
  const Region pad = ambient.subtract(inner);
  if (pad.empty()) return t;
  return merge_factorize(t, TensorElement::unit(t.n(), Partition::trivial(pad)));
}

bool equivalent_mod_refinement(const TensorElement& x, const TensorElement& y) {
  if (x.n() != y.n()) return false;
  if (x.partition().of() != y.partition().of()) return false;
  const Partition common = common_refinement(x.partition(), y.partition());
  return embed_refine(x, common) == embed_refine(y, common);
}

}  // namespace polyweyl
