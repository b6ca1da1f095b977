#include "rdnf/hypercube.hpp"

#include <algorithm>
#include <bit>

#include "rdnf/error.hpp"

namespace rdnf {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxGeometryDim) {
    throw DomainError("dimension " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxGeometryDim) + "]");
  }
}

void check_same(int a, int b) {
  if (a != b) {
    throw DomainError("dimension mismatch: " + std::to_string(a) + " vs " +
                      std::to_string(b));
  }
}

}  // namespace

Vertex::Vertex(int n, Mask index) : n_(n), index_(index) {
  check_dim(n);
  if ((index & ~low_bits(n)) != 0) {
    throw DomainError("vertex index out of range for dimension " + std::to_string(n));
  }
}

Vertex Vertex::from_coords(std::span<const int> coords) {
  Mask index = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] != 0 && coords[j] != 1) {
      throw DomainError("vertex coordinates must be 0 or 1");
    }
    if (coords[j] != 0 && j < 64) {
      index |= Mask{1} << j;
    }
  }
  return Vertex(static_cast<int>(coords.size()), index);
}

int Vertex::weight() const { return std::popcount(index_); }

std::string Vertex::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int j = 0; j < n_; ++j) {
    if (coord(j) != 0) {
      out[static_cast<std::size_t>(j)] = '1';
    }
  }
  return out;
}

Interval::Interval(int n, Mask fixed, Mask values) : n_(n), fixed_(fixed), values_(values) {
  check_dim(n);
  if ((fixed & ~low_bits(n)) != 0) {
    throw DomainError("fixed mask exceeds dimension");
  }
  if ((values & ~fixed) != 0) {
    throw DomainError("interval values set outside the fixed positions");
  }
}

Interval Interval::point(const Vertex& v) {
  return Interval(v.dimension(), low_bits(v.dimension()), v.index());
}

Interval Interval::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxGeometryDim)) {
    throw ParseError("interval string length must be in [1, " +
                     std::to_string(kMaxGeometryDim) + "]");
  }
  Mask fixed = 0;
  Mask values = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    const Mask bit = Mask{1} << j;
    switch (text[j]) {
      case '0':
        fixed |= bit;
        break;
      case '1':
        fixed |= bit;
        values |= bit;
        break;
      case '-':
        break;
      default:
        throw ParseError("invalid interval character '" + std::string(1, text[j]) + "'");
    }
  }
  return Interval(static_cast<int>(text.size()), fixed, values);
}

int Interval::rank() const { return std::popcount(fixed_); }

bool Interval::contains(const Interval& inner) const {
  check_same(n_, inner.n_);
  return (fixed_ & ~inner.fixed_) == 0 && ((inner.values_ ^ values_) & fixed_) == 0;
}

std::string Interval::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '-');
  for (int j = 0; j < n_; ++j) {
    if ((fixed_ >> j) & 1u) {
      out[static_cast<std::size_t>(j)] = ((values_ >> j) & 1u) ? '1' : '0';
    }
  }
  return out;
}

Direction::Direction(int n, Mask fixed) : n_(n), fixed_(fixed) {
  check_dim(n);
  if ((fixed & ~low_bits(n)) != 0) {
    throw DomainError("fixed mask exceeds dimension");
  }
}

int Direction::rank() const { return std::popcount(fixed_); }

std::vector<Interval> Direction::intervals() const {
  std::vector<Interval> out;
  out.reserve(std::size_t{1} << rank());
  // Enumerate submasks of `fixed_` in ascending order.
  Mask sub = 0;
  do {
    out.emplace_back(n_, fixed_, sub);
    sub = (sub - fixed_) & fixed_;
  } while (sub != 0);
  return out;
}

Interval stretch(const Vertex& a, const Vertex& b) {
  check_same(a.dimension(), b.dimension());
  const Mask agree = ~(a.index() ^ b.index()) & low_bits(a.dimension());
  return Interval(a.dimension(), agree, a.index() & agree);
}

std::vector<Vertex> vertices(const Interval& interval) {
  const Mask free = interval.free_mask();
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << std::popcount(free));
  Mask sub = 0;
  do {
    out.emplace_back(interval.ambient(), interval.values() | sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  return out;
}

std::vector<Interval> neighbors(const Interval& interval) {
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(interval.rank()));
  for (Mask rest = interval.fixed(); rest != 0; rest &= rest - 1) {
    const Mask bit = rest & (~rest + 1);
    out.emplace_back(interval.ambient(), interval.fixed(), interval.values() ^ bit);
  }
  return out;
}

bool are_neighbors(const Interval& a, const Interval& b) {
  check_same(a.ambient(), b.ambient());
  return a.fixed() == b.fixed() && std::popcount(a.values() ^ b.values()) == 1;
}

Interval join(const Interval& a, const Interval& b) {
  if (!are_neighbors(a, b)) {
    throw DomainError("join requires neighbor intervals: " + a.to_string() + ", " +
                      b.to_string());
  }
  const Mask freed = a.values() ^ b.values();
  return Interval(a.ambient(), a.fixed() & ~freed, a.values() & ~freed);
}

int hamming(const Vertex& a, const Vertex& b) {
  check_same(a.dimension(), b.dimension());
  return std::popcount(a.index() ^ b.index());
}

int weight(const Vertex& v) { return v.weight(); }

std::vector<Vertex> layer(const Vertex& center, int k) {
  const int n = center.dimension();
  if (k < 0 || k > n) {
    throw DomainError("layer index " + std::to_string(k) + " outside [0, " +
                      std::to_string(n) + "]");
  }
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  // Flip patterns of weight k in ascending order (Gosper's hack), then sort
  // by resulting index.
  if (k == 0) {
    out.push_back(center);
    return out;
  }
  const Mask limit = low_bits(n);
  for (Mask flip = low_bits(k); flip <= limit && flip != 0;) {
    out.emplace_back(n, center.index() ^ flip);
    const Mask c = flip & (~flip + 1);
    const Mask r = flip + c;
    if (r == 0 || r > limit) {
      break;
    }
    flip = (((r ^ flip) >> 2) / c) | r;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool covers(const Interval& interval, const Vertex& v) {
  check_same(interval.ambient(), v.dimension());
  return ((v.index() ^ interval.values()) & interval.fixed()) == 0;
}

bool dnf_covers(std::span<const Interval> dnf, const Vertex& v) {
  for (const auto& term : dnf) {
    if (covers(term, v)) {
      return true;
    }
  }
  return false;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 62 || k < 0 || k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") outside the exact range");
  }
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t count_intervals(int n, int k) {
  // 3^40 is the largest power of three below 2^64.
  if (n < 1 || n > 40 || k < 0 || k > n) {
    throw DomainError("count_intervals(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") outside [0, n], 1 <= n <= 40");
  }
  return binomial(n, k) << (n - k);
}

}  // namespace rdnf
