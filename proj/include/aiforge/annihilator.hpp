#pragma once

// Annihilator search and algebraic immunity.
//
// An annihilator g of degree <= e is a coefficient vector over the monomials
// of weight <= e. Each point α in supp(f) contributes one linear equation
// g(α) = ⊕_{β ⪯ α} c_β = 0, so annihilators exist iff the rows
// monomial_row(α) for α in supp(f) fail to have full column rank.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "aiforge/boolfun.hpp"
#include "aiforge/gf2.hpp"

namespace aiforge {

/// Columns of the annihilator system: all masks of weight <= bound, ordered
/// by weight, then by integer value.
class MonomialIndex {
 public:
  MonomialIndex(unsigned n, unsigned bound);

  unsigned n() const { return n_; }
  unsigned bound() const { return bound_; }
  std::size_t size() const { return masks_.size(); }
  Mask mask(std::size_t column) const { return masks_[column]; }
  const std::vector<Mask>& masks() const { return masks_; }
  /// Column of β; β must have weight <= bound.
  std::size_t column(Mask beta) const;

 private:
  friend gf2::BitRow monomial_row(Mask alpha, const MonomialIndex& idx);

  unsigned n_;
  unsigned bound_;
  std::vector<std::size_t> offset_;  // first column of each weight
  std::vector<Mask> masks_;
};

/// Evaluations of every indexed monomial at α: bit β is set iff β ⪯ α.
gf2::BitRow monomial_row(Mask alpha, const MonomialIndex& idx);

enum class Side { function, complement };

const char* to_string(Side side);

struct AiReport {
  unsigned ai = 0;
  std::optional<AnfVector> witness;
  Side side = Side::function;
};

struct CertificateReport {
  unsigned d = 0;
  bool certified = false;
  std::size_t columns = 0;
  std::size_t rank_f = 0;
  std::size_t rank_fc = 0;
  std::size_t rows_f = 0;
  std::size_t rows_fc = 0;
};

/// A nonzero g with deg(g) <= e and f·g = 0, or nullopt if none exists.
/// Returned witnesses are verified pointwise before returning.
std::optional<AnfVector> has_annihilator_of_degree_at_most(const TruthTable& f, unsigned e,
                                                           gf2::Parallelism par = {});

/// Exact AI by increasing e, testing f then f⊕1 at each degree. The witness
/// has degree exactly ai. Constants have AI 0.
AiReport compute_ai_exact(const TruthTable& f, gf2::Parallelism par = {});

/// Sufficient check for AI(f) >= d on a symmetric f, without truth tables.
///
/// For each of f and f⊕1, rows are taken from support points whose weight
/// lies in [0, d-1] (ascending) or [n-d+1, n] (descending) and fed to the
/// rank engine with early exit at Σ_{i<d} C(n, i). Full rank on both sides
/// proves there is no annihilator of degree < d. A false result is
/// inconclusive.
CertificateReport certify_ai_lower_bound(const SymmetricFunction& f, unsigned d,
                                         gf2::Parallelism par = {});

}  // namespace aiforge
