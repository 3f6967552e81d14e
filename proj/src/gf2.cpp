#include "aiforge/gf2.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "aiforge/errors.hpp"

namespace aiforge::gf2 {

namespace {

Word tail_mask(std::size_t width) {
  const std::size_t rem = width % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

void xor_tail(std::span<Word> dst, std::span<const Word> src, std::size_t from_word) {
  Word* d = dst.data();
  const Word* s = src.data();
  const std::size_t n = dst.size();
  for (std::size_t i = from_word; i < n; ++i) d[i] ^= s[i];
}

}  // namespace

BitRow BitRow::from_string(std::string_view bits) {
  BitRow row(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      row.set(i);
    } else if (bits[i] != '0') {
      throw ContractViolation("bit string may only contain '0' and '1'");
    }
  }
  return row;
}

std::size_t BitRow::popcount() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitRow::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitRow::lowest_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return width_;
}

void BitRow::trim() {
  if (!words_.empty()) words_.back() &= tail_mask(width_);
}

BitRow& BitRow::operator^=(const BitRow& other) {
  require(width_ == other.width_, "BitRow width mismatch");
  xor_tail(words_, other.words_, 0);
  return *this;
}

BitRow& BitRow::operator&=(const BitRow& other) {
  require(width_ == other.width_, "BitRow width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitRow BitRow::operator~() const {
  BitRow out(*this);
  for (Word& w : out.words_) w = ~w;
  out.trim();
  return out;
}

std::string BitRow::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

bool dot(const BitRow& a, const BitRow& b) {
  require(a.width() == b.width(), "dot: width mismatch");
  Word acc = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) acc ^= wa[i] & wb[i];
  return std::popcount(acc) & 1;
}

unsigned Parallelism::resolved() const {
  if (threads != 0) return threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

RankAccumulator::RankAccumulator(std::size_t width)
    : width_(width), pivot_of_(width, -1) {
  require(width <= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()),
          "RankAccumulator: width too large");
}

std::size_t RankAccumulator::reduce_from(std::span<Word> w, std::size_t from_col) const {
  if (from_col >= width_) return width_;
  const std::size_t nw = w.size();
  for (std::size_t wi = from_col / kWordBits; wi < nw; ++wi) {
    const unsigned start = wi == from_col / kWordBits ? from_col % kWordBits : 0;
    Word bits = w[wi] & (~Word{0} << start);
    while (bits != 0) {
      const auto b = static_cast<unsigned>(std::countr_zero(bits));
      const std::size_t col = wi * kWordBits + b;
      const std::int32_t p = pivot_of_[col];
      if (p < 0) return col;
      xor_tail(w, rows_[static_cast<std::size_t>(p)].words(), wi);
      bits = w[wi] & (~Word{0} << b);
    }
  }
  return width_;
}

void RankAccumulator::store(BitRow&& row, std::size_t pivot) {
  pivot_of_[pivot] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
}

bool RankAccumulator::absorb(BitRow row) {
  require(row.width() == width_, "absorb: row width does not match accumulator");
  const std::size_t pivot = reduce_from(row.words(), 0);
  if (pivot == width_) return false;
  store(std::move(row), pivot);
  return true;
}

std::size_t RankAccumulator::absorb_batch(std::span<BitRow> rows, std::size_t stop_at,
                                          Parallelism par) {
  for (const BitRow& r : rows) require(r.width() == width_, "absorb: row width does not match accumulator");
  if (rows.empty() || rank() >= stop_at) return 0;

  // Phase 1: reduce against the frozen pivot set. Stopping at the first bit
  // without a pivot makes the later sequential pass reproduce exactly the
  // XOR sequence a one-row-at-a-time absorb would perform.
  std::vector<std::size_t> resume(rows.size(), 0);
  const unsigned threads = std::min<std::size_t>(par.resolved(), rows.size());
  if (threads > 1 && !rows_.empty()) {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (rows.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(rows.size(), lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back([this, rows, &resume, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) resume[i] = reduce_from(rows[i].words(), 0);
      });
    }
  }

  // Phase 2: finish each row against pivots added by earlier rows of the batch.
  std::size_t consumed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ++consumed;
    const std::size_t pivot = reduce_from(rows[i].words(), resume[i]);
    if (pivot < width_) {
      store(std::move(rows[i]), pivot);
      if (rank() >= stop_at) break;
    }
  }
  return consumed;
}

std::optional<BitRow> RankAccumulator::kernel_vector() const {
  std::size_t free_col = width_;
  for (std::size_t c = 0; c < width_; ++c) {
    if (pivot_of_[c] < 0) {
      free_col = c;
      break;
    }
  }
  if (free_col == width_) return std::nullopt;

  BitRow c(width_);
  c.set(free_col);
  // Each stored row has support only at and above its pivot, so solving
  // pivots from the highest column down only reads already-fixed entries.
  for (std::size_t col = width_; col-- > 0;) {
    const std::int32_t p = pivot_of_[col];
    if (p >= 0 && dot(rows_[static_cast<std::size_t>(p)], c)) c.set(col);
  }
  return c;
}

std::size_t absorb_stream(RankAccumulator& acc, const RowSource& rows, const RankOptions& opts) {
  const std::size_t stop_at = opts.early_exit_at.value_or(std::numeric_limits<std::size_t>::max());
  const unsigned threads = opts.parallelism.resolved();
  const std::size_t batch =
      opts.batch_rows != 0 ? opts.batch_rows : (threads <= 1 ? 1 : std::size_t{32} * threads);

  std::size_t consumed = 0;
  if (acc.rank() >= stop_at) return consumed;

  std::vector<BitRow> pending;
  pending.reserve(batch);
  bool exhausted = false;
  while (!exhausted) {
    pending.clear();
    while (pending.size() < batch) {
      BitRow next;
      if (!rows(next)) {
        exhausted = true;
        break;
      }
      require(next.width() == acc.width(), "rank_streaming: row width mismatch");
      pending.push_back(std::move(next));
    }
    if (pending.empty()) break;
    if (acc.full()) {
      // Nothing left to gain; count the remaining rows without reducing them.
      consumed += pending.size();
      continue;
    }
    consumed += acc.absorb_batch(pending, stop_at, opts.parallelism);
    if (acc.rank() >= stop_at) break;
  }
  return consumed;
}

RankResult rank_streaming(const RowSource& rows, std::size_t width, const RankOptions& opts) {
  RankAccumulator acc(width);
  RankResult result;
  result.rows_consumed = absorb_stream(acc, rows, opts);
  result.rank = acc.rank();
  return result;
}

std::size_t rank_streaming(std::span<const BitRow> rows, std::size_t width,
                           std::optional<std::size_t> early_exit_at) {
  std::size_t next = 0;
  RowSource source = [&](BitRow& out) {
    if (next == rows.size()) return false;
    out = rows[next++];
    return true;
  };
  RankOptions opts;
  opts.early_exit_at = early_exit_at;
  return rank_streaming(source, width, opts).rank;
}

std::optional<BitRow> nullspace_vector(std::span<const BitRow> rows, std::size_t width) {
  RankAccumulator acc(width);
  for (const BitRow& r : rows) {
    require(r.width() == width, "nullspace_vector: row width mismatch");
    if (acc.full()) break;
    acc.absorb(r);
  }
  auto c = acc.kernel_vector();
  if (!c) return std::nullopt;
  for (const BitRow& r : rows) {
    if (dot(r, *c)) throw std::logic_error("nullspace_vector: kernel check failed");
  }
  return c;
}

}  // namespace aiforge::gf2
