#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "nalab/rational.hpp"

namespace nalab {

enum class Parity { Even, Odd, Mixed };

/// Strictly increasing words over e_1..e_m are encoded as bitmasks
/// (bit i-1 set = e_i present). The empty word is the unit.
using ExtWord = std::uint64_t;

int ext_word_len(ExtWord w);
inline int ext_word_parity(ExtWord w) { return ext_word_len(w) & 1; }

/// Sign of sorting the concatenation a.b into a single increasing word:
/// (-1)^inversions, or 0 when the words share a generator.
int ext_merge_sign(ExtWord a, ExtWord b);

std::string ext_word_text(ExtWord w);
ExtWord parse_ext_word(std::string_view text, std::size_t* pos = nullptr);

/// Element of the Grassmann algebra on `bound` generators.
class ExtElement {
 public:
  explicit ExtElement(int bound) : bound_(bound) {}
  static ExtElement unit(int bound);
  static ExtElement generator(int i, int bound);
  static ExtElement word_elem(ExtWord w, int bound, const Rational& c = 1);

  int bound() const { return bound_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ExtWord, Rational>& terms() const { return terms_; }
  void add_term(ExtWord w, const Rational& c);

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement scaled(const Rational& c) const;
  bool operator==(const ExtElement&) const = default;

  std::string text() const;
  static ExtElement parse(std::string_view text, int bound);

 private:
  std::map<ExtWord, Rational> terms_;
  int bound_;
};

ExtElement ext_mul(const ExtElement& u, const ExtElement& v);
Parity ext_parity(const ExtElement& u);

}  // namespace nalab
