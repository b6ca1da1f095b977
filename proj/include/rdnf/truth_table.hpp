#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdnf/hypercube.hpp"

namespace rdnf {

// A fully defined Boolean function of n variables, packed LSB-first into
// 64-bit words: bit i holds f at vertex index i.
class TruthTable {
 public:
  // All-zero function. Throws DomainError for n < 1, CapExceeded above kMaxEnumDim.
  explicit TruthTable(int n);
  TruthTable(int n, std::vector<std::uint64_t> words);

  static TruthTable constant(int n, bool value);
  // Builds the table by evaluating `pred(index)` at every vertex.
  template <typename Pred>
  static TruthTable from_predicate(int n, Pred&& pred) {
    TruthTable tt(n);
    for (Mask i = 0; i < tt.num_vertices(); ++i) {
      if (pred(i)) {
        tt.set(i, true);
      }
    }
    return tt;
  }

  int num_vars() const { return n_; }
  Mask num_vertices() const { return Mask{1} << n_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool get(Mask index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
  void set(Mask index, bool value);
  bool at(const Vertex& v) const;

  // |N_f|, the number of true vertices.
  std::uint64_t count_ones() const;

  // Function g with g(x) = f(x permuted), where output coordinate j reads input
  // coordinate perm[j]: g(y) = f(x) with x_{perm[j]} = y_j.
  TruthTable permute(std::span<const int> perm) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// Text format: line "n=<int>", then ceil(2^n/4) hex digits, most significant
// digit first, bit i of the number = f at vertex index i.
std::string to_text(const TruthTable& tt);
// Throws ParseError on malformed input and CapExceeded for n > kMaxEnumDim.
TruthTable parse_truth_table(std::string_view text);

std::string to_hex(const TruthTable& tt);
TruthTable from_hex(int n, std::string_view hex);

}  // namespace rdnf
