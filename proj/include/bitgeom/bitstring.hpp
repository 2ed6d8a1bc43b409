#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace bitgeom {

// Finite 0/1 sequence. Serves both as a vertex of a Hamming cube and as a
// node of the binary tree (the empty sequence is the root).
class BitString {
 public:
  BitString() = default;

  // Validates that every character is '0' or '1'.
  static BitString parse(std::string_view text);

  // Big-endian binary expansion of `value`, left-padded to `length` bits.
  static BitString from_value(std::uint64_t value, std::size_t length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool bit(std::size_t i) const { return bits_[i] == '1'; }

  // Initial segment of the given length; requires len <= size().
  BitString prefix(std::size_t len) const;

  // Maximal proper initial segment; requires a nonempty string.
  BitString parent() const;

  BitString child(bool b) const;  // appends one symbol

  bool is_prefix_of(const BitString& other) const;

  // Binary value; requires size() <= 63.
  std::uint64_t value() const;

  const std::string& str() const { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  // Plain lexicographic order ('0' < '1'); on equal lengths this is the
  // canonical vertex order.
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  explicit BitString(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

BitString concat(const BitString& a, const BitString& b);
std::size_t common_prefix_length(const BitString& a, const BitString& b);

// Requires equal lengths.
std::size_t hamming_distance(const BitString& a, const BitString& b);

// (k1,...,km) -> (k1,k1,...,km,km)
BitString doubling(const BitString& s);

// (k1,...,km) -> (k1,k1,k1,k1,...,km,km,km,km)
BitString quadrupling(const BitString& s);

// The unique n with 2^n - 1 <= |s| < 2^{n+1} - 1.
int level_of(const BitString& s);

// Shorter-first, then lexicographic. Canonical vertex order for trees.
bool length_lex_less(const BitString& a, const BitString& b);

struct BitStringHash {
  std::size_t operator()(const BitString& s) const {
    return std::hash<std::string>{}(s.str());
  }
};

}  // namespace bitgeom
