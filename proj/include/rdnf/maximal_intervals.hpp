#pragma once

// Maximal intervals (prime implicants) of a fully defined Boolean function and
// the reduced disjunctive normal form built from them.
//
// Three enumerators are provided and are expected to agree as sets:
//   * enumerate_bruteforce: tests each of the 3^n intervals with explicit
//     vertex loops (reference, n <= 12);
//   * enumerate_fast: bit-parallel sweep over all directions;
//   * blake_consensus: iterated consensus with absorption from the minterms.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdnf/hypercube.hpp"
#include "rdnf/truth_table.hpp"

namespace rdnf {

inline constexpr int kMaxBruteForceDim = 12;

// r_k(f) for k = 0..n.
struct Spectrum {
  int n = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t complexity() const;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// All maximal intervals of a function, kept sorted by (fixed, values).
class ReducedDnf {
 public:
  explicit ReducedDnf(int n) : n_(n) {}
  // Sorts and deduplicates.
  ReducedDnf(int n, std::vector<Interval> intervals);

  int num_vars() const { return n_; }
  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  bool contains(const Interval& interval) const;

  Spectrum spectrum() const;
  // Ternary strings ordered by (dimension, string).
  std::vector<std::string> sorted_strings() const;

  friend bool operator==(const ReducedDnf&, const ReducedDnf&) = default;

 private:
  int n_;
  std::vector<Interval> intervals_;
};

// Whether every vertex of the interval is a 1-vertex of f.
bool all_ones(const TruthTable& f, const Interval& interval);
// Whether the interval contains at least one 1-vertex of f.
bool has_one(const TruthTable& f, const Interval& interval);

// An interval is maximal when it holds no zero vertex, holds a one vertex,
// and each of its neighbor intervals holds at least one zero vertex.
bool is_maximal(const TruthTable& f, const Interval& interval);

ReducedDnf enumerate_bruteforce(const TruthTable& f);
ReducedDnf enumerate_fast(const TruthTable& f);
ReducedDnf blake_consensus(const TruthTable& f);

// r_k(f) without materializing the interval list.
Spectrum spectrum(const TruthTable& f);
std::uint64_t rdnf_complexity(const TruthTable& f);

// Formula text with one name per variable. Terms are ordered by (dimension,
// ternary string), literals by variable position; "0" for the empty form and
// "1" for the full cube. Throws DomainError on a name-count mismatch.
std::string render_dnf(const ReducedDnf& dnf, std::span<const std::string> names);

}  // namespace rdnf
