#include "bitgeom/bitstring.hpp"

#include <bit>
#include <cassert>

#include "bitgeom/errors.hpp"

namespace bitgeom {

BitString BitString::parse(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1')
      throw argument_error("bit string may contain only '0'/'1', got '" + std::string(text) + "'");
  }
  return BitString(std::string(text));
}

BitString BitString::from_value(std::uint64_t value, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i)
    if (value >> (length - 1 - i) & 1u) s[i] = '1';
  return BitString(std::move(s));
}

BitString BitString::prefix(std::size_t len) const {
  assert(len <= bits_.size());
  return BitString(bits_.substr(0, len));
}

BitString BitString::parent() const {
  if (bits_.empty()) throw argument_error("the empty sequence has no parent");
  return BitString(bits_.substr(0, bits_.size() - 1));
}

BitString BitString::child(bool b) const {
  return BitString(bits_ + (b ? '1' : '0'));
}

bool BitString::is_prefix_of(const BitString& other) const {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

std::uint64_t BitString::value() const {
  assert(bits_.size() <= 63);
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

BitString concat(const BitString& a, const BitString& b) {
  return BitString::parse(a.str() + b.str());
}

std::size_t common_prefix_length(const BitString& a, const BitString& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a.str()[i] == b.str()[i]) ++i;
  return i;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size())
    throw argument_error("hamming_distance requires equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a.str()[i] != b.str()[i];
  return d;
}

namespace {
BitString repeat_each(const BitString& s, int k) {
  std::string out;
  out.reserve(s.size() * static_cast<std::size_t>(k));
  for (char c : s.str()) out.append(static_cast<std::size_t>(k), c);
  return BitString::parse(out);
}
}  // namespace

BitString doubling(const BitString& s) { return repeat_each(s, 2); }

BitString quadrupling(const BitString& s) { return repeat_each(s, 4); }

int level_of(const BitString& s) {
  // |s| + 1 in [2^n, 2^{n+1})  <=>  2^n - 1 <= |s| < 2^{n+1} - 1
  return std::bit_width(s.size() + 1) - 1;
}

bool length_lex_less(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.str() < b.str();
}

}  // namespace bitgeom
