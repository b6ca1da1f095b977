#include "rdnf/maximal_intervals.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "rdnf/error.hpp"

namespace rdnf {

std::uint64_t Spectrum::complexity() const {
  std::uint64_t total = 0;
  for (auto c : counts) {
    total += c;
  }
  return total;
}

ReducedDnf::ReducedDnf(int n, std::vector<Interval> intervals)
    : n_(n), intervals_(std::move(intervals)) {
  for (const auto& i : intervals_) {
    if (i.ambient() != n) {
      throw DomainError("interval dimension does not match reduced form");
    }
  }
  std::sort(intervals_.begin(), intervals_.end());
  intervals_.erase(std::unique(intervals_.begin(), intervals_.end()), intervals_.end());
}

bool ReducedDnf::contains(const Interval& interval) const {
  return std::binary_search(intervals_.begin(), intervals_.end(), interval);
}

Spectrum ReducedDnf::spectrum() const {
  Spectrum s{n_, std::vector<std::uint64_t>(static_cast<std::size_t>(n_) + 1, 0)};
  for (const auto& i : intervals_) {
    ++s.counts[static_cast<std::size_t>(i.dimension())];
  }
  return s;
}

std::vector<std::string> ReducedDnf::sorted_strings() const {
  std::vector<std::pair<int, std::string>> keyed;
  keyed.reserve(intervals_.size());
  for (const auto& i : intervals_) {
    keyed.emplace_back(i.dimension(), i.to_string());
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (auto& [dim, text] : keyed) {
    out.push_back(std::move(text));
  }
  return out;
}

namespace {

void check_match(const TruthTable& f, const Interval& interval) {
  if (f.num_vars() != interval.ambient()) {
    throw DomainError("interval dimension " + std::to_string(interval.ambient()) +
                      " does not match function dimension " + std::to_string(f.num_vars()));
  }
}

// Vertex loops over the interval's free coordinates.
template <typename Fn>
bool any_vertex(const Interval& interval, Fn&& fn) {
  const Mask free = interval.free_mask();
  Mask sub = 0;
  do {
    if (fn(interval.values() | sub)) {
      return true;
    }
    sub = (sub - free) & free;
  } while (sub != 0);
  return false;
}

bool has_zero(const TruthTable& f, const Interval& interval) {
  return any_vertex(interval, [&](Mask v) { return !f.get(v); });
}

//---------------------------------------------------------------------------//
// Bit-parallel sweep.
//
// For a free set S the table g_S has one bit per interval of direction
// complement(S), indexed by the values of the fixed coordinates packed in
// ascending coordinate order; the bit says whether the interval is all-ones.
// Freeing coordinate j (at packed position q) ANDs the two halves of g_S
// along q. A set bit of g_S is maximal exactly when none of its Hamming
// neighbours along the packed positions is set, since a neighbour interval is
// all-ones iff the joined interval is.
//---------------------------------------------------------------------------//

constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

// Packs the bits at positions whose index bit q is clear into the low half.
inline std::uint64_t compact(std::uint64_t x, int q) {
  x &= kLowHalf[static_cast<std::size_t>(q)];
  for (int s = q; s < 5; ++s) {
    x = (x | (x >> (1 << s))) & kLowHalf[static_cast<std::size_t>(s + 1)];
  }
  return x;
}

using Table = std::vector<std::uint64_t>;

std::size_t table_words(int m) { return m <= 6 ? 1 : (std::size_t{1} << (m - 6)); }

// ANDs the two halves of an m-dimensional table along packed position q.
void reduce(const Table& in, int m, int q, Table& out) {
  out.assign(table_words(m - 1), 0);
  if (q >= 6) {
    const std::size_t block = std::size_t{1} << (q - 6);
    std::size_t o = 0;
    for (std::size_t base = 0; base < in.size(); base += 2 * block) {
      for (std::size_t i = 0; i < block; ++i) {
        out[o++] = in[base + i] & in[base + block + i];
      }
    }
    return;
  }
  const int shift = 1 << q;
  if (m <= 6) {
    out[0] = compact(in[0] & (in[0] >> shift), q);
    return;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t lo = in[2 * i];
    const std::uint64_t hi = in[2 * i + 1];
    out[i] = compact(lo & (lo >> shift), q) | (compact(hi & (hi >> shift), q) << 32);
  }
}

// Bits of g with no set Hamming neighbour.
void isolated_bits(const Table& g, int m, Table& out) {
  out = g;
  for (int q = 0; q < std::min(m, 6); ++q) {
    const int shift = 1 << q;
    const std::uint64_t lo = kLowHalf[static_cast<std::size_t>(q)];
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t w = g[i];
      out[i] &= ~(((w >> shift) & lo) | ((w & lo) << shift));
    }
  }
  for (int q = 6; q < m; ++q) {
    const std::size_t stride = std::size_t{1} << (q - 6);
    for (std::size_t i = 0; i < g.size(); ++i) {
      out[i] &= ~g[i ^ stride];
    }
  }
}

bool is_zero(const Table& t) {
  return std::all_of(t.begin(), t.end(), [](std::uint64_t w) { return w == 0; });
}

// Scatters the low bits of `packed` onto the set bits of `positions`.
inline Mask deposit(Mask packed, Mask positions) {
  Mask out = 0;
  for (Mask rest = positions; rest != 0 && packed != 0; rest &= rest - 1, packed >>= 1) {
    if (packed & 1u) {
      out |= rest & (~rest + 1);
    }
  }
  return out;
}

// Calls visit(free_set, maximal_bits_table) for every free set with at least
// one all-ones interval.
template <typename Visit>
class Sweep {
 public:
  Sweep(int n, Visit& visit) : n_(n), visit_(visit), scratch_(static_cast<std::size_t>(n) + 1) {}

  void run(const TruthTable& f) {
    Table root(f.words().begin(), f.words().end());
    descend(root, 0, 0);
  }

 private:
  void descend(const Table& g, Mask free, int depth) {
    const int m = n_ - depth;
    Table& iso = scratch_[static_cast<std::size_t>(depth)].isolated;
    isolated_bits(g, m, iso);
    visit_(free, std::as_const(iso));
    const int top = free == 0 ? -1 : (63 - std::countl_zero(free));
    Table child;
    for (int j = top + 1; j < n_; ++j) {
      reduce(g, m, j - depth, child);
      if (!is_zero(child)) {
        descend(child, free | (Mask{1} << j), depth + 1);
      }
    }
  }

  struct Scratch {
    Table isolated;
  };

  int n_;
  Visit& visit_;
  std::vector<Scratch> scratch_;
};

template <typename Visit>
void sweep(const TruthTable& f, Visit& visit) {
  Sweep<Visit> s(f.num_vars(), visit);
  s.run(f);
}

void check_cap(const TruthTable& f, int cap, const char* what) {
  if (f.num_vars() > cap) {
    throw CapExceeded(std::string(what) + ": dimension " + std::to_string(f.num_vars()) +
                      " exceeds cap " + std::to_string(cap));
  }
}

//---------------------------------------------------------------------------//
// Iterated consensus.
//---------------------------------------------------------------------------//

struct TermKey {
  Mask fixed;
  Mask values;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

struct TermKeyHash {
  std::size_t operator()(const TermKey& k) const noexcept {
    std::uint64_t h = k.fixed * 0x9E3779B97F4A7C15ull ^ (k.values + 0x632BE59BD9B4E019ull);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Per-term bookkeeping for the closure: kUnseen, kRejected (offered and
// absorbed, or evicted), or slot + kFirstSlot while the term is in the set.
// Small n uses a dense table over the 3^n ternary codes.
class TermIndex {
 public:
  static constexpr std::uint32_t kUnseen = 0;
  static constexpr std::uint32_t kRejected = 1;
  static constexpr std::uint32_t kFirstSlot = 2;
  static constexpr int kMaxDenseDim = 13;

  explicit TermIndex(int n) : n_(n) {
    if (n <= kMaxDenseDim) {
      std::size_t codes = 1;
      for (int i = 0; i < n; ++i) {
        codes *= 3;
      }
      dense_.assign(codes, kUnseen);
      for (Mask m = 0; m < pow3_.size(); ++m) {
        std::uint32_t acc = 0, weight = 1;
        for (int j = 0; j < 7; ++j, weight *= 3) {
          acc += ((m >> j) & 1u) * weight;
        }
        pow3_[m] = acc;
      }
    }
  }

  std::uint32_t get(const TermKey& k) const {
    if (!dense_.empty()) {
      return dense_[code(k)];
    }
    const auto it = sparse_.find(k);
    return it == sparse_.end() ? kUnseen : it->second;
  }

  void set(const TermKey& k, std::uint32_t state) {
    if (!dense_.empty()) {
      dense_[code(k)] = state;
    } else {
      sparse_[k] = state;
    }
  }

 private:
  // Digit j is 0 or 1 for a fixed coordinate and 2 for a free one.
  std::size_t code(const TermKey& k) const {
    const Mask free = low_bits(n_) & ~k.fixed;
    return ternary(k.values) + 2 * ternary(free);
  }

  std::size_t ternary(Mask m) const {
    // 3^7 = 2187
    return pow3_[m & 0x7F] + 2187 * pow3_[(m >> 7) & 0x7F];
  }

  int n_;
  std::vector<std::uint32_t> dense_;
  std::array<std::uint32_t, 128> pow3_{};
  std::unordered_map<TermKey, std::uint32_t, TermKeyHash> sparse_;
};

class ConsensusClosure {
 public:
  explicit ConsensusClosure(int n) : n_(n), index_(n) {}

  // Offers a term; it is kept unless an existing term absorbs it, and it
  // evicts the existing terms it absorbs. A term once offered is never
  // reconsidered: whatever absorbed it, or a larger term, stays in the set.
  void add(const TermKey& t) {
    if (index_.get(t) != TermIndex::kUnseen) {
      return;
    }
    if (absorbed(t)) {
      index_.set(t, TermIndex::kRejected);
      return;
    }
    evict_contained(t);
    const auto slot = static_cast<std::uint32_t>(list_.size());
    index_.set(t, slot + TermIndex::kFirstSlot);
    list_.push_back(t);
    state_.push_back(kPending);
    auto& bucket = bucket_for(t.fixed);
    bucket.slots.push_back(slot);
    ++bucket.alive;
    ++live_;
    work_.push(t);
  }

  void run() {
    while (!work_.empty()) {
      const TermKey t = work_.top();
      work_.pop();
      if (live_ * 2 < list_.size()) {
        compact();
      }
      const std::uint32_t id = index_.get(t);
      if (id < TermIndex::kFirstSlot) {
        continue;  // absorbed since it was queued
      }
      const std::size_t t_slot = id - TermIndex::kFirstSlot;
      // Each pair is resolved once, when its later member comes off the queue.
      partners_.clear();
      for (const auto& [u, slot] : done_) {
        const Mask opposed = t.fixed & u.fixed & (t.values ^ u.values);
        if (opposed != 0 && (opposed & (opposed - 1)) == 0 && state_[slot] == kProcessed) {
          partners_.push_back(slot);
        }
      }
      for (const std::size_t i : partners_) {
        if (state_[t_slot] == kDead) {
          break;
        }
        const TermKey u = list_[i];
        const Mask opposed = t.fixed & u.fixed & (t.values ^ u.values);
        const Mask fixed = (t.fixed | u.fixed) & ~opposed;
        add(TermKey{fixed, (t.values | u.values) & fixed});
      }
      if (state_[t_slot] != kDead) {
        state_[t_slot] = kProcessed;
        done_.emplace_back(t, static_cast<std::uint32_t>(t_slot));
      }
    }
  }

  std::vector<Interval> result() const {
    std::vector<Interval> out;
    out.reserve(live_);
    for (std::size_t i = 0; i < list_.size(); ++i) {
      if (state_[i] != kDead) {
        out.emplace_back(n_, list_[i].fixed, list_[i].values);
      }
    }
    return out;
  }

 private:
  enum : char { kDead = 0, kPending = 1, kProcessed = 2 };

  struct Bucket {
    Mask mask = 0;
    std::vector<std::uint32_t> slots;  // may hold evicted slots
    std::size_t alive = 0;
  };

  Bucket& bucket_for(Mask mask) {
    const auto [it, inserted] = bucket_of_.try_emplace(mask, buckets_.size());
    if (inserted) {
      buckets_.push_back(Bucket{mask, {}, 0});
    }
    return buckets_[it->second];
  }

  static bool contains(const TermKey& outer, const TermKey& inner) {
    return (outer.fixed & ~inner.fixed) == 0 && ((outer.values ^ inner.values) & outer.fixed) == 0;
  }

  bool live(const TermKey& k) const { return index_.get(k) >= TermIndex::kFirstSlot; }

  // Some live term contains t. Its mask is a subset of t.fixed: either probe
  // every such subset or walk the occupied masks.
  bool absorbed(const TermKey& t) const {
    const int rank = std::popcount(t.fixed);
    if (rank < 20 && (std::size_t{1} << rank) <= buckets_.size()) {
      Mask sub = t.fixed;
      while (true) {
        if (live(TermKey{sub, t.values & sub})) {
          return true;
        }
        if (sub == 0) {
          return false;
        }
        sub = (sub - 1) & t.fixed;
      }
    }
    for (const auto& bucket : buckets_) {
      if (bucket.alive != 0 && (bucket.mask & ~t.fixed) == 0 &&
          live(TermKey{bucket.mask, t.values & bucket.mask})) {
        return true;
      }
    }
    return false;
  }

  // Evicts every live term contained in t; those sit in buckets whose mask is
  // a superset of t.fixed.
  void evict_contained(const TermKey& t) {
    for (auto& bucket : buckets_) {
      if ((t.fixed & ~bucket.mask) != 0 || bucket.alive == 0) {
        continue;
      }
      const Mask extra = bucket.mask & ~t.fixed;
      const int width = std::popcount(extra);
      if (width < 20 && (std::size_t{1} << width) < bucket.slots.size()) {
        Mask sub = 0;
        do {
          const std::uint32_t id = index_.get(TermKey{bucket.mask, t.values | sub});
          if (id >= TermIndex::kFirstSlot) {
            evict(id - TermIndex::kFirstSlot, bucket);
          }
          sub = (sub - extra) & extra;
        } while (sub != 0);
      } else {
        for (const std::uint32_t slot : bucket.slots) {
          if (state_[slot] != kDead && contains(t, list_[slot])) {
            evict(slot, bucket);
          }
        }
        if (bucket.alive * 2 < bucket.slots.size()) {
          std::erase_if(bucket.slots, [&](std::uint32_t s) { return state_[s] == kDead; });
        }
      }
    }
  }

  // Drops evicted slots and renumbers the rest.
  void compact() {
    std::size_t out = 0;
    for (std::size_t i = 0; i < list_.size(); ++i) {
      if (state_[i] != kDead) {
        list_[out] = list_[i];
        state_[out] = state_[i];
        index_.set(list_[out], static_cast<std::uint32_t>(out) + TermIndex::kFirstSlot);
        ++out;
      }
    }
    list_.resize(out);
    state_.resize(out);
    done_.clear();
    for (std::size_t i = 0; i < out; ++i) {
      if (state_[i] == kProcessed) {
        done_.emplace_back(list_[i], static_cast<std::uint32_t>(i));
      }
    }
    for (auto& bucket : buckets_) {
      bucket.slots.clear();
    }
    for (std::size_t i = 0; i < out; ++i) {
      buckets_[bucket_of_.at(list_[i].fixed)].slots.push_back(static_cast<std::uint32_t>(i));
    }
  }

  void evict(std::size_t slot, Bucket& bucket) {
    state_[slot] = kDead;
    index_.set(list_[slot], TermIndex::kRejected);
    --bucket.alive;
    --live_;
  }

  // Fewest literals first; the rest makes the order total.
  struct Later {
    bool operator()(const TermKey& a, const TermKey& b) const {
      return std::make_tuple(std::popcount(a.fixed), a.fixed, a.values) >
             std::make_tuple(std::popcount(b.fixed), b.fixed, b.values);
    }
  };

  int n_;
  TermIndex index_;
  std::vector<TermKey> list_;
  std::vector<char> state_;
  std::size_t live_ = 0;
  std::vector<std::size_t> partners_;
  // Processed terms in processing order, scanned for consensus partners.
  std::vector<std::pair<TermKey, std::uint32_t>> done_;
  std::vector<Bucket> buckets_;
  std::unordered_map<Mask, std::size_t> bucket_of_;
  std::priority_queue<TermKey, std::vector<TermKey>, Later> work_;
};

}  // namespace

bool all_ones(const TruthTable& f, const Interval& interval) {
  check_match(f, interval);
  return !has_zero(f, interval);
}

bool has_one(const TruthTable& f, const Interval& interval) {
  check_match(f, interval);
  return any_vertex(interval, [&](Mask v) { return f.get(v); });
}

bool is_maximal(const TruthTable& f, const Interval& interval) {
  check_match(f, interval);
  const bool no_zero = !has_zero(f, interval);
  const bool some_one = has_one(f, interval);
  if (!no_zero || !some_one) {
    return false;
  }
  for (const auto& nb : neighbors(interval)) {
    if (!has_zero(f, nb)) {
      return false;
    }
  }
  return true;
}

ReducedDnf enumerate_bruteforce(const TruthTable& f) {
  check_cap(f, kMaxBruteForceDim, "enumerate_bruteforce");
  const int n = f.num_vars();
  std::vector<Interval> found;
  for (Mask fixed = 0; fixed <= low_bits(n); ++fixed) {
    Mask values = 0;
    do {
      const Interval candidate(n, fixed, values);
      if (is_maximal(f, candidate)) {
        found.push_back(candidate);
      }
      values = (values - fixed) & fixed;
    } while (values != 0);
  }
  return ReducedDnf(n, std::move(found));
}

ReducedDnf enumerate_fast(const TruthTable& f) {
  check_cap(f, kMaxEnumDim, "enumerate_fast");
  const int n = f.num_vars();
  const Mask all = low_bits(n);
  std::vector<Interval> found;
  auto collect = [&](Mask free, const Table& isolated) {
    const Mask fixed = all & ~free;
    for (std::size_t w = 0; w < isolated.size(); ++w) {
      for (std::uint64_t bits = isolated[w]; bits != 0; bits &= bits - 1) {
        const Mask packed = (Mask{w} << 6) | static_cast<Mask>(std::countr_zero(bits));
        found.emplace_back(n, fixed, deposit(packed, fixed));
      }
    }
  };
  sweep(f, collect);
  return ReducedDnf(n, std::move(found));
}

ReducedDnf blake_consensus(const TruthTable& f) {
  check_cap(f, kMaxEnumDim, "blake_consensus");
  const int n = f.num_vars();
  ConsensusClosure closure(n);
  const Mask all = low_bits(n);
  for (Mask v = 0; v < f.num_vertices(); ++v) {
    if (f.get(v)) {
      closure.add(TermKey{all, v});
    }
  }
  closure.run();
  return ReducedDnf(n, closure.result());
}

Spectrum spectrum(const TruthTable& f) {
  check_cap(f, kMaxEnumDim, "spectrum");
  const int n = f.num_vars();
  Spectrum s{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)};
  auto count = [&](Mask free, const Table& isolated) {
    std::uint64_t total = 0;
    for (auto w : isolated) {
      total += static_cast<std::uint64_t>(std::popcount(w));
    }
    s.counts[static_cast<std::size_t>(std::popcount(free))] += total;
  };
  sweep(f, count);
  return s;
}

std::uint64_t rdnf_complexity(const TruthTable& f) { return spectrum(f).complexity(); }

std::string render_dnf(const ReducedDnf& dnf, std::span<const std::string> names) {
  const int n = dnf.num_vars();
  if (names.size() != static_cast<std::size_t>(n)) {
    throw DomainError("render_dnf needs " + std::to_string(n) + " names, got " +
                      std::to_string(names.size()));
  }
  if (dnf.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& term : dnf.sorted_strings()) {
    if (!out.empty()) {
      out += " ∨ ";
    }
    std::string lits;
    for (std::size_t j = 0; j < term.size(); ++j) {
      if (term[j] == '-') {
        continue;
      }
      if (!lits.empty()) {
        lits += "∧";
      }
      if (term[j] == '0') {
        lits += "¬";
      }
      lits += names[j];
    }
    out += lits.empty() ? "1" : lits;
  }
  return out;
}

}  // namespace rdnf
