#include "rdnf/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "rdnf/error.hpp"

namespace rdnf {

namespace {

std::size_t word_count(int n) { return n <= 6 ? 1 : (std::size_t{1} << (n - 6)); }

void check_enum_dim(int n) {
  if (n < 1) {
    throw DomainError("truth table dimension must be >= 1");
  }
  if (n > kMaxEnumDim) {
    throw CapExceeded("truth table dimension " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxEnumDim));
  }
}

std::uint64_t used_mask(int n) { return n >= 6 ? ~std::uint64_t{0} : low_bits(1 << n); }

std::size_t hex_digits(int n) { return n < 2 ? 1 : (std::size_t{1} << (n - 2)); }

}  // namespace

TruthTable::TruthTable(int n) : n_(n) {
  check_enum_dim(n);
  words_.assign(word_count(n), 0);
}

TruthTable::TruthTable(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
  check_enum_dim(n);
  if (words_.size() != word_count(n)) {
    throw DomainError("truth table word count does not match dimension");
  }
  if ((words_[0] & ~used_mask(n)) != 0) {
    throw DomainError("truth table has bits beyond 2^n");
  }
}

TruthTable TruthTable::constant(int n, bool value) {
  TruthTable tt(n);
  if (value) {
    std::fill(tt.words_.begin(), tt.words_.end(), used_mask(n));
  }
  return tt;
}

void TruthTable::set(Mask index, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (value) {
    words_[index >> 6] |= bit;
  } else {
    words_[index >> 6] &= ~bit;
  }
}

bool TruthTable::at(const Vertex& v) const {
  if (v.dimension() != n_) {
    throw DomainError("vertex dimension does not match truth table");
  }
  return get(v.index());
}

std::uint64_t TruthTable::count_ones() const {
  std::uint64_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::uint64_t>(std::popcount(w));
  }
  return total;
}

TruthTable TruthTable::permute(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw DomainError("permutation length does not match dimension");
  }
  Mask seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || ((seen >> p) & 1u)) {
      throw DomainError("not a permutation");
    }
    seen |= Mask{1} << p;
  }
  TruthTable out(n_);
  for (Mask y = 0; y < num_vertices(); ++y) {
    Mask x = 0;
    for (int j = 0; j < n_; ++j) {
      x |= ((y >> j) & 1u) << perm[static_cast<std::size_t>(j)];
    }
    out.set(y, get(x));
  }
  return out;
}

std::string to_hex(const TruthTable& tt) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const std::size_t digits = hex_digits(tt.num_vars());
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    const std::size_t bit = d * 4;
    const unsigned nibble = (tt.words()[bit >> 6] >> (bit & 63)) & 0xFu;
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

TruthTable from_hex(int n, std::string_view hex) {
  check_enum_dim(n);
  const std::size_t digits = hex_digits(n);
  if (hex.size() != digits) {
    throw ParseError("expected " + std::to_string(digits) + " hex digits for n=" +
                     std::to_string(n) + ", got " + std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    unsigned nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw ParseError("invalid hex digit '" + std::string(1, c) + "'");
    }
    const std::size_t bit = d * 4;
    words[bit >> 6] |= std::uint64_t{nibble} << (bit & 63);
  }
  if ((words[0] & ~used_mask(n)) != 0) {
    throw ParseError("hex value has bits set beyond 2^n for n=" + std::to_string(n));
  }
  return TruthTable(n, std::move(words));
}

std::string to_text(const TruthTable& tt) {
  return "n=" + std::to_string(tt.num_vars()) + "\n" + to_hex(tt) + "\n";
}

TruthTable parse_truth_table(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
      s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
      s.remove_suffix(1);
    }
    return s;
  };
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = trim(text.substr(0, eol));
    if (!line.empty()) {
      lines.push_back(line);
    }
    if (eol == std::string_view::npos) {
      break;
    }
    text.remove_prefix(eol + 1);
  }
  if (lines.size() != 2) {
    throw ParseError("truth table needs exactly two non-empty lines: \"n=<int>\" and hex");
  }
  const auto header = lines[0];
  if (header.size() < 3 || header.substr(0, 2) != "n=") {
    throw ParseError("truth table header must be \"n=<int>\"");
  }
  int n = 0;
  const auto digits = header.substr(2);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("truth table header must be \"n=<int>\"");
  }
  if (n < 1) {
    throw ParseError("truth table dimension must be >= 1");
  }
  return from_hex(n, lines[1]);
}

}  // namespace rdnf
