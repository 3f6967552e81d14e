#include "aiforge/annihilator.hpp"

#include <stdexcept>
#include <string>

#include "aiforge/errors.hpp"

namespace aiforge {

namespace {

// Walks every mask of each listed weight, weight by weight, in list order.
class WeightSliceCursor {
 public:
  WeightSliceCursor(unsigned n, std::vector<unsigned> weights) : n_(n), weights_(std::move(weights)) {}

  bool next(Mask& out) {
    while (slice_ < weights_.size()) {
      const unsigned w = weights_[slice_];
      if (!started_) {
        started_ = true;
        current_ = w == 0 ? 0 : (Mask{1} << w) - 1;
        out = current_;
        return true;
      }
      const Mask last = w == 0 ? 0 : ((Mask{1} << w) - 1) << (n_ - w);
      if (current_ == last) {
        ++slice_;
        started_ = false;
        continue;
      }
      current_ = next_same_weight(current_);
      out = current_;
      return true;
    }
    return false;
  }

 private:
  unsigned n_;
  std::vector<unsigned> weights_;
  std::size_t slice_ = 0;
  bool started_ = false;
  Mask current_ = 0;
};

void fill_row(const std::vector<unsigned>& positions, std::size_t start, unsigned depth,
              std::size_t colex, const MonomialIndex& idx, const std::vector<std::size_t>& offset,
              gf2::BitRow& row) {
  row.set(offset[depth] + colex);
  if (depth == idx.bound()) return;
  for (std::size_t i = start; i < positions.size(); ++i) {
    fill_row(positions, i + 1, depth + 1,
             colex + static_cast<std::size_t>(binomial(positions[i], depth + 1)), idx, offset, row);
  }
}

void verify_annihilator(const TruthTable& f, const AnfVector& g, unsigned e) {
  if (g.is_zero()) throw std::logic_error("annihilator witness is zero");
  if (g.degree() > e) throw std::logic_error("annihilator witness exceeds the degree bound");
  TruthTable values = mobius_transform(g);
  values.bits() &= f.bits();
  if (!values.bits().none()) throw std::logic_error("annihilator witness does not annihilate f");
}

}  // namespace

MonomialIndex::MonomialIndex(unsigned n, unsigned bound) : n_(n), bound_(bound) {
  require(n <= 63, "MonomialIndex: n must be <= 63");
  require(bound <= n, "MonomialIndex: degree bound exceeds n");
  const std::uint64_t total = binomial_prefix_sum(n, bound);
  if (total > (std::uint64_t{1} << 31)) {
    throw CapacityError("annihilator system with " + std::to_string(total) + " unknowns is too large");
  }
  masks_.reserve(total);
  offset_.reserve(bound + 2);
  for (unsigned w = 0; w <= bound; ++w) {
    offset_.push_back(masks_.size());
    for_each_mask_of_weight(n, w, [this](Mask m) { masks_.push_back(m); });
  }
  offset_.push_back(masks_.size());
}

std::size_t MonomialIndex::column(Mask beta) const {
  const unsigned w = weight(beta);
  require(w <= bound_, "MonomialIndex: monomial above the degree bound");
  require(n_ == 64 || (beta >> n_) == 0, "MonomialIndex: monomial uses variables beyond n");
  // Masks of equal weight in increasing order are in colex order; the colex
  // rank of {p_1 < ... < p_w} is Σ C(p_j, j).
  std::size_t rank = 0;
  unsigned j = 0;
  for (Mask m = beta; m != 0; m &= m - 1) {
    ++j;
    rank += static_cast<std::size_t>(binomial(static_cast<unsigned>(std::countr_zero(m)), j));
  }
  return offset_[w] + rank;
}

gf2::BitRow monomial_row(Mask alpha, const MonomialIndex& idx) {
  require(idx.n() == 64 || (alpha >> idx.n()) == 0, "monomial_row: point uses variables beyond n");
  std::vector<unsigned> positions;
  positions.reserve(weight(alpha));
  for (Mask m = alpha; m != 0; m &= m - 1) positions.push_back(static_cast<unsigned>(std::countr_zero(m)));
  gf2::BitRow row(idx.size());
  fill_row(positions, 0, 0, 0, idx, idx.offset_, row);
  return row;
}

const char* to_string(Side side) { return side == Side::function ? "f" : "f+1"; }

std::optional<AnfVector> has_annihilator_of_degree_at_most(const TruthTable& f, unsigned e,
                                                           gf2::Parallelism par) {
  const unsigned n = f.n();
  require(e <= n, "has_annihilator_of_degree_at_most: e must be <= n");
  const MonomialIndex idx(n, e);

  std::vector<unsigned> weights(n + 1);
  for (unsigned w = 0; w <= n; ++w) weights[w] = w;
  WeightSliceCursor cursor(n, std::move(weights));
  gf2::RowSource support = [&](gf2::BitRow& out) {
    Mask alpha = 0;
    while (cursor.next(alpha)) {
      if (f(alpha)) {
        out = monomial_row(alpha, idx);
        return true;
      }
    }
    return false;
  };

  gf2::RankAccumulator acc(idx.size());
  gf2::RankOptions opts;
  opts.early_exit_at = idx.size();
  opts.parallelism = par;
  gf2::absorb_stream(acc, support, opts);

  const auto kernel = acc.kernel_vector();
  if (!kernel) return std::nullopt;
  AnfVector g(n);
  for (std::size_t col = 0; col < idx.size(); ++col) {
    if (kernel->test(col)) g.set(idx.mask(col), true);
  }
  verify_annihilator(f, g, e);
  return g;
}

AiReport compute_ai_exact(const TruthTable& f, gf2::Parallelism par) {
  const unsigned n = f.n();
  const unsigned ceiling = (n + 1) / 2;
  const TruthTable fc = complement(f);

  std::optional<AiReport> found;
  for (unsigned e = 0; e <= ceiling && !found; ++e) {
    if (auto g = has_annihilator_of_degree_at_most(f, e, par)) {
      found = AiReport{e, std::move(g), Side::function};
    } else if (auto gc = has_annihilator_of_degree_at_most(fc, e, par)) {
      found = AiReport{e, std::move(gc), Side::complement};
    }
  }
  if (!found) throw std::logic_error("no annihilator found up to degree ceil(n/2)");

  const std::size_t weight = f.weight();
  if (weight != 0 && weight != f.size()) {
    if (found->ai > mobius_transform(f).degree()) throw std::logic_error("AI exceeds deg(f)");
  }
  return *found;
}

CertificateReport certify_ai_lower_bound(const SymmetricFunction& f, unsigned d, gf2::Parallelism par) {
  const unsigned n = f.n();
  require(d >= 1 && 2 * d <= n, "certify_ai_lower_bound: need 1 <= d <= n/2");
  if (n > 62) throw CapacityError("certify_ai_lower_bound: n must be <= 62");

  const MonomialIndex idx(n, d - 1);
  CertificateReport report;
  report.d = d;
  report.columns = idx.size();

  auto run_side = [&](const SymmetricFunction& side) {
    std::vector<unsigned> weights;
    for (unsigned w = 0; w < d; ++w) {
      if (side[w]) weights.push_back(w);
    }
    for (unsigned w = n; w >= n - d + 1; --w) {
      if (side[w]) weights.push_back(w);
    }
    WeightSliceCursor cursor(n, std::move(weights));
    gf2::RowSource rows = [&](gf2::BitRow& out) {
      Mask alpha = 0;
      if (!cursor.next(alpha)) return false;
      out = monomial_row(alpha, idx);
      return true;
    };
    gf2::RankOptions opts;
    opts.early_exit_at = idx.size();
    opts.parallelism = par;
    return gf2::rank_streaming(rows, idx.size(), opts);
  };

  const auto f_side = run_side(f);
  const auto fc_side = run_side(complement(f));
  report.rank_f = f_side.rank;
  report.rows_f = f_side.rows_consumed;
  report.rank_fc = fc_side.rank;
  report.rows_fc = fc_side.rows_consumed;
  report.certified = report.rank_f == report.columns && report.rank_fc == report.columns;
  return report;
}

}  // namespace aiforge
