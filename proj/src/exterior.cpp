#include "nalab/exterior.hpp"

#include <bit>
#include <cctype>

#include "nalab/error.hpp"

namespace nalab {

int ext_word_len(ExtWord w) { return std::popcount(w); }

int ext_merge_sign(ExtWord a, ExtWord b) {
  if (a & b) return 0;
  // inversions = pairs (i in a, j in b) with i > j
  int inv = 0;
  ExtWord rest = a;
  while (rest) {
    ExtWord low = rest & (rest - 1);
    ExtWord bit = rest ^ low;  // highest handled separately; order irrelevant for the count
    inv += std::popcount(b & (bit - 1));
    rest = low;
  }
  return (inv & 1) ? -1 : 1;
}

std::string ext_word_text(ExtWord w) {
  if (!w) return "1";
  std::string s;
  for (int i = 0; i < 64; ++i) {
    if (w & (ExtWord{1} << i)) {
      if (!s.empty()) s += "^";
      s += "e" + std::to_string(i + 1);
    }
  }
  return s;
}

ExtWord parse_ext_word(std::string_view t, std::size_t* pos) {
  std::size_t i = pos ? *pos : 0;
  ExtWord w = 0;
  if (i < t.size() && t[i] == '1') {
    ++i;
  } else {
    while (true) {
      if (i >= t.size() || t[i] != 'e')
        fail(Errc::SyntaxError, "expected exterior word at offset " + std::to_string(i));
      std::size_t d = ++i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
      if (i == d) fail(Errc::SyntaxError, "expected generator index at offset " + std::to_string(i));
      int idx = std::stoi(std::string(t.substr(d, i - d)));
      if (idx < 1 || idx > 64) fail(Errc::SyntaxError, "generator index out of range");
      ExtWord bit = ExtWord{1} << (idx - 1);
      if (w & bit) fail(Errc::SyntaxError, "repeated generator in word");
      w |= bit;
      if (i < t.size() && t[i] == '^') {
        ++i;
        continue;
      }
      break;
    }
  }
  if (pos) {
    *pos = i;
  } else if (i != t.size()) {
    fail(Errc::SyntaxError, "trailing characters in exterior word");
  }
  return w;
}

ExtElement ExtElement::unit(int bound) {
  ExtElement e(bound);
  e.add_term(0, 1);
  return e;
}

ExtElement ExtElement::generator(int i, int bound) {
  if (i < 1 || i > bound) fail(Errc::BoundMismatch, "generator index beyond bound");
  ExtElement e(bound);
  e.add_term(ExtWord{1} << (i - 1), 1);
  return e;
}

ExtElement ExtElement::word_elem(ExtWord w, int bound, const Rational& c) {
  ExtElement e(bound);
  e.add_term(w, c);
  return e;
}

void ExtElement::add_term(ExtWord w, const Rational& c) {
  if (c == 0) return;
  if (bound_ < 64 && (w >> bound_) != 0) fail(Errc::BoundMismatch, "word beyond generator bound");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
  if (bound_ != o.bound_) fail(Errc::BoundMismatch, "adding elements of different rank");
  ExtElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
  if (bound_ != o.bound_) fail(Errc::BoundMismatch, "subtracting elements of different rank");
  ExtElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

ExtElement ExtElement::scaled(const Rational& c) const {
  ExtElement r(bound_);
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

std::string ExtElement::text() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    bool neg = c < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Rational a = neg ? Rational(-c) : c;
    if (a == 1) {
      s += ext_word_text(w);
    } else {
      s += rat_text(a) + "*" + ext_word_text(w);
    }
  }
  return s;
}

ExtElement ExtElement::parse(std::string_view t, int bound) {
  ExtElement e(bound);
  std::size_t i = 0;
  auto skip = [&] { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; };
  skip();
  if (i >= t.size()) fail(Errc::SyntaxError, "empty exterior element");
  if (t.substr(i) == "0") return e;
  bool neg = false;
  if (t[i] == '-') { neg = true; ++i; }
  while (true) {
    skip();
    Rational c = 1;
    if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      // Could be a coefficient or the unit word "1".
      if (t[i] == '1' && (i + 1 >= t.size() || (t[i + 1] != '/' && t[i + 1] != '*' &&
                                                !std::isdigit(static_cast<unsigned char>(t[i + 1]))))) {
        // unit word
      } else {
        c = parse_rational(t, &i);
        skip();
        if (i < t.size() && t[i] == '*') { ++i; skip(); }
      }
    }
    ExtWord w = parse_ext_word(t, &i);
    e.add_term(w, neg ? Rational(-c) : c);
    skip();
    if (i >= t.size()) break;
    if (t[i] == '+') { neg = false; ++i; }
    else if (t[i] == '-') { neg = true; ++i; }
    else fail(Errc::SyntaxError, "unexpected character in exterior element");
  }
  return e;
}

ExtElement ext_mul(const ExtElement& u, const ExtElement& v) {
  if (u.bound() != v.bound()) fail(Errc::BoundMismatch, "multiplying elements of different rank");
  ExtElement r(u.bound());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      int sign = ext_merge_sign(a, b);
      if (!sign) continue;
      r.add_term(a | b, ca * cb * sign);
    }
  }
  return r;
}

Parity ext_parity(const ExtElement& u) {
  bool even = false, odd = false;
  for (const auto& [w, c] : u.terms()) (ext_word_parity(w) ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  if (odd) return Parity::Odd;
  return Parity::Even;
}

}  // namespace nalab
