#pragma once

// Bit-packed dense linear algebra over GF(2).
//
// Rows are stored as whole 64-bit words; all elimination work is word XOR.
// The pivot of a stored row is its lowest set bit, and every stored row has
// a distinct pivot, so a row reduced against the accumulator has a unique
// remainder regardless of the order in which the pivots arrived.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aiforge::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t width) : width_(width), words_(words_for(width), 0) {}

  /// Parses a '0'/'1' string; character c is bit c.
  static BitRow from_string(std::string_view bits);

  std::size_t width() const { return width_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t popcount() const;
  bool none() const;
  /// Index of the lowest set bit, or width() when the row is zero.
  std::size_t lowest_set() const;

  /// Clears bits at positions >= width (canonical padding).
  void trim();

  BitRow& operator^=(const BitRow& other);
  BitRow& operator&=(const BitRow& other);
  BitRow operator~() const;

  std::string to_string() const;

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<Word> words_;
};

/// Inner product over GF(2).
bool dot(const BitRow& a, const BitRow& b);

/// Parallelism knob for elimination. 0 means std::thread::hardware_concurrency().
struct Parallelism {
  unsigned threads = 1;
  unsigned resolved() const;
};

class RankAccumulator {
 public:
  explicit RankAccumulator(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == width_; }

  /// Reduces `row` against the stored pivots. Stores the remainder and returns
  /// true if it is nonzero.
  bool absorb(BitRow row);

  /// Absorbs rows in order, stopping once rank reaches `stop_at`. Reduction of
  /// the batch against the already-stored pivots runs on `par` threads; the
  /// resulting state is identical to calling absorb() on each row in turn.
  /// Returns the number of rows consumed.
  std::size_t absorb_batch(std::span<BitRow> rows, std::size_t stop_at, Parallelism par = {});

  bool is_pivot(std::size_t col) const { return pivot_of_[col] >= 0; }

  /// A nonzero vector orthogonal to every absorbed row, or nullopt at full rank.
  /// The lowest non-pivot column is set to 1.
  std::optional<BitRow> kernel_vector() const;

  std::span<const BitRow> rows() const { return rows_; }

 private:
  // Clears pivot-column bits of `w` from `from_col` upward until a set bit
  // without a pivot is found. Returns that column, or width_ if none remains.
  std::size_t reduce_from(std::span<Word> w, std::size_t from_col) const;
  void store(BitRow&& row, std::size_t pivot);

  std::size_t width_;
  std::vector<BitRow> rows_;
  std::vector<std::int32_t> pivot_of_;
};

/// Pulls the next row into `out`; returns false when the stream is exhausted.
using RowSource = std::function<bool(BitRow& out)>;

struct RankResult {
  std::size_t rank = 0;
  std::size_t rows_consumed = 0;
};

struct RankOptions {
  std::optional<std::size_t> early_exit_at;
  Parallelism parallelism;
  std::size_t batch_rows = 0;  // 0: chosen from the thread count
};

/// Pulls rows from `rows` into `acc` until the stream ends or the rank
/// reaches opts.early_exit_at. Returns the number of rows consumed.
std::size_t absorb_stream(RankAccumulator& acc, const RowSource& rows, const RankOptions& opts = {});

/// Rank of a lazily produced row set. Rows are pulled only while needed.
RankResult rank_streaming(const RowSource& rows, std::size_t width, const RankOptions& opts = {});

std::size_t rank_streaming(std::span<const BitRow> rows, std::size_t width,
                           std::optional<std::size_t> early_exit_at = std::nullopt);

/// Some nonzero c with row . c = 0 for every row, or nullopt when the rows
/// have full column rank. The result is checked against every row.
std::optional<BitRow> nullspace_vector(std::span<const BitRow> rows, std::size_t width);

}  // namespace aiforge::gf2
