#pragma once

#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brik/error.hpp"

namespace brik {

// Finite binary word, bit-packed 64 symbols per limb, addressed 1-based.
//
// Symbol at public position p lives at bit (p-1) % 64 of limb (p-1) / 64.
// Bits past size() in the last limb are always zero, so limb-wise equality
// is word equality.
class Word {
 public:
  using size_type = std::uint64_t;

  Word() = default;

  // All-zero word of the given length.
  explicit Word(size_type length) : data_((length + 63) / 64, 0), size_(length) {}

  static Word from_string(std::string_view bits) {
    Word w;
    w.reserve(bits.size());
    for (char c : bits) {
      if (c != '0' && c != '1') throw ParseError("not a binary word: '" + std::string(bits) + "'");
      w.push_back(c == '1');
    }
    return w;
  }

  size_type size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  void reserve(size_type bits) { data_.reserve((bits + 63) / 64); }

  // Unchecked 1-based access.
  int operator[](size_type pos) const noexcept {
    const size_type i = pos - 1;
    return static_cast<int>((data_[i >> 6] >> (i & 63)) & 1u);
  }

  int at(size_type pos) const {
    if (pos < 1 || pos > size_)
      throw std::out_of_range("position " + std::to_string(pos) + " outside word of length " +
                              std::to_string(size_));
    return (*this)[pos];
  }

  void set(size_type pos, int bit) {
    if (pos < 1 || pos > size_) throw std::out_of_range("set: position " + std::to_string(pos));
    const size_type i = pos - 1;
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (bit)
      data_[i >> 6] |= mask;
    else
      data_[i >> 6] &= ~mask;
  }

  void push_back(int bit) { push_raw(bit ? 1u : 0u, 1); }

  void append(const Word& other) { append_slice(other, 1, other.size()); }

  // Appends src[a..b]. Requires 1 <= a <= b+1 and b <= |src|; a == b+1 appends
  // nothing. src may alias *this.
  void append_slice(const Word& src, size_type a, size_type b) {
    check_slice(src, a, b);
    size_type off = a - 1;
    size_type remaining = b + 1 - a;
    reserve(size_ + remaining);
    while (remaining > 0) {
      const unsigned n = remaining >= 64 ? 64u : static_cast<unsigned>(remaining);
      const std::uint64_t chunk = src.raw(off, n);
      push_raw(chunk, n);
      off += n;
      remaining -= n;
    }
  }

  Word slice(size_type a, size_type b) const {
    Word out;
    out.append_slice(*this, a, b);
    return out;
  }

  // w[pos..pos+count-1] as an integer whose most significant bit is w[pos];
  // this orders equal-length words lexicographically with 0 < 1.
  std::uint64_t code(size_type pos, unsigned count) const {
    if (count > 64 || pos < 1 || pos - 1 + count > size_) throw std::out_of_range("code: range");
    std::uint64_t v = 0;
    for (unsigned j = 0; j < count; ++j) v = (v << 1) | static_cast<std::uint64_t>((*this)[pos + j]);
    return v;
  }

  static Word from_code(std::uint64_t code, unsigned length) {
    Word w;
    for (unsigned j = length; j-- > 0;) w.push_back(static_cast<int>((code >> j) & 1u));
    return w;
  }

  size_type count_ones() const noexcept {
    size_type total = 0;
    for (std::uint64_t limb : data_) total += static_cast<size_type>(std::popcount(limb));
    return total;
  }

  bool starts_with(const Word& w) const {
    return w.size() <= size_ && slice(1, w.size()) == w;
  }
  bool ends_with(const Word& w) const {
    return w.size() <= size_ && slice(size_ - w.size() + 1, size_) == w;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (size_type p = 1; p <= size_; ++p)
      if ((*this)[p]) s[p - 1] = '1';
    return s;
  }

  const std::vector<std::uint64_t>& limbs() const noexcept { return data_; }

  friend bool operator==(const Word& x, const Word& y) noexcept {
    return x.size_ == y.size_ && x.data_ == y.data_;
  }

  friend Word operator+(Word x, const Word& y) {
    x.append(y);
    return x;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

 private:
  static void check_slice(const Word& w, size_type a, size_type b) {
    if (a < 1 || a > b + 1 || b > w.size())
      throw std::out_of_range("slice [" + std::to_string(a) + ".." + std::to_string(b) +
                              "] of word with length " + std::to_string(w.size()));
  }

  // n <= 64 bits starting at 0-based offset, LSB-first.
  std::uint64_t raw(size_type offset, unsigned n) const noexcept {
    const size_type limb = offset >> 6;
    const unsigned shift = static_cast<unsigned>(offset & 63);
    std::uint64_t v = data_[limb] >> shift;
    if (shift != 0 && limb + 1 < data_.size()) v |= data_[limb + 1] << (64 - shift);
    return n == 64 ? v : v & ((std::uint64_t{1} << n) - 1);
  }

  void push_raw(std::uint64_t v, unsigned n) {
    const unsigned shift = static_cast<unsigned>(size_ & 63);
    if (shift == 0) {
      data_.push_back(v);
    } else {
      data_.back() |= v << shift;
      if (n > 64 - shift) data_.push_back(v >> (64 - shift));
    }
    size_ += n;
  }

  std::vector<std::uint64_t> data_;
  size_type size_ = 0;
};

}  // namespace brik
