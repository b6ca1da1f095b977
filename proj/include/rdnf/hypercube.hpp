#pragma once

// Value types and pure geometry of the n-cube E^n.
//
// Coordinates are 0-based internally: bit j of a vertex index holds the value
// of x_{j+1}. Text renderings use position j for x_{j+1}, so "1-0" is the
// interval x_1 = 1, x_3 = 0 with x_2 free.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rdnf {

// Largest ambient dimension for geometry types (indices are 64-bit words).
inline constexpr int kMaxGeometryDim = 63;

// Largest dimension for enumeration-bearing types (truth tables, fast
// enumeration, consensus, Monte Carlo).
inline constexpr int kMaxEnumDim = 24;

using Mask = std::uint64_t;

inline constexpr Mask low_bits(int count) {
  return count >= 64 ? ~Mask{0} : ((Mask{1} << count) - 1);
}

class Vertex {
 public:
  // Throws DomainError unless 1 <= n <= kMaxGeometryDim and index < 2^n.
  Vertex(int n, Mask index);
  // From a 0/1 coordinate list, element j = x_{j+1}.
  static Vertex from_coords(std::span<const int> coords);

  int dimension() const { return n_; }
  Mask index() const { return index_; }
  int coord(int j) const { return static_cast<int>((index_ >> j) & 1u); }
  int weight() const;
  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  int n_;
  Mask index_;
};

// A subcube: the coordinates in `fixed` take the values in `values`; the rest
// are free. `values` is zero outside `fixed`, so equality is mask equality.
class Interval {
 public:
  Interval(int n, Mask fixed, Mask values);
  static Interval full(int n) { return Interval(n, 0, 0); }
  static Interval point(const Vertex& v);
  // Parses a ternary string over {0,1,-}; throws ParseError.
  static Interval parse(std::string_view text);

  int ambient() const { return n_; }
  Mask fixed() const { return fixed_; }
  Mask values() const { return values_; }
  int rank() const;
  int dimension() const { return n_ - rank(); }
  Mask free_mask() const { return low_bits(n_) & ~fixed_; }

  Vertex min_vertex() const { return Vertex(n_, values_); }
  Vertex max_vertex() const { return Vertex(n_, values_ | free_mask()); }

  // Whether every vertex of `inner` lies in this interval.
  bool contains(const Interval& inner) const;

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;

 private:
  int n_;
  Mask fixed_;
  Mask values_;
};

// The set of fixed positions shared by a family of intervals.
class Direction {
 public:
  Direction(int n, Mask fixed);

  int ambient() const { return n_; }
  Mask fixed() const { return fixed_; }
  int rank() const;
  // All 2^rank intervals of this direction, ascending by their values mask.
  std::vector<Interval> intervals() const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  int n_;
  Mask fixed_;
};

// Smallest interval containing both vertices.
Interval stretch(const Vertex& a, const Vertex& b);

// Vertices of the interval in ascending index order.
std::vector<Vertex> vertices(const Interval& interval);

// Intervals of the same direction whose fixed values differ in exactly one
// position, ordered by that position.
std::vector<Interval> neighbors(const Interval& interval);

bool are_neighbors(const Interval& a, const Interval& b);

// Frees the single coordinate on which two neighbor intervals differ.
// Throws DomainError when the arguments are not neighbors.
Interval join(const Interval& a, const Interval& b);

int hamming(const Vertex& a, const Vertex& b);
int weight(const Vertex& v);

// Vertices at Hamming distance exactly k from `center`, ascending index.
std::vector<Vertex> layer(const Vertex& center, int k);

bool covers(const Interval& interval, const Vertex& v);
bool dnf_covers(std::span<const Interval> dnf, const Vertex& v);

// Number of k-dimensional intervals of E^n: C(n,k) * 2^(n-k).
std::uint64_t count_intervals(int n, int k);

// Exact C(n,k) for n <= 62; throws DomainError otherwise.
std::uint64_t binomial(int n, int k);

}  // namespace rdnf
