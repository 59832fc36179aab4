#pragma once

// Words in the free group F2 = <s, t>, homology classes, slopes, and the
// explicit primitive representatives W_{m,n}.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ptorus/sl2.hpp"

namespace ptorus {

enum class Generator : std::uint8_t { s = 1, t = 2 };

struct Letter {
  Generator gen = Generator::s;
  std::int8_t exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-exp)}; }
  bool cancels(const Letter& other) const { return gen == other.gen && exp == -other.exp; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Every mutating operation keeps it reduced.
class Word {
 public:
  Word() = default;

  /// Reduces the given letter sequence.
  static Word from_letters(const std::vector<Letter>& letters);

  /// Parses "s t s^-1"; whitespace separated, "" is the empty word.
  static Word parse(std::string_view text);

  /// Appends one letter, cancelling against the last letter if needed.
  void push_back(const Letter& letter);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;

  /// Rotation moving the first k letters to the end. The result is reduced
  /// only when the word is cyclically reduced.
  Word rotated(std::size_t k) const;

  bool is_cyclically_reduced() const;

  std::string to_string() const;

  friend Word operator*(const Word& l, const Word& r);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// An element of H1(T, Z) = Z^2, the exponent sums of s and t.
struct HomologyClass {
  std::int64_t m = 0;
  std::int64_t n = 0;

  HomologyClass operator-() const { return {-m, -n}; }
  friend HomologyClass operator+(HomologyClass l, HomologyClass r) { return {l.m + r.m, l.n + r.n}; }
  friend HomologyClass operator*(std::int64_t k, HomologyClass h) { return {k * h.m, k * h.n}; }
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

/// Primitive class up to sign: gcd(|m|,|n|) = 1 with n > 0, or (1, 0).
class Slope {
 public:
  Slope() = default;

  /// Canonicalizes the sign; throws NotCoprime unless gcd(|m|,|n|) = 1.
  Slope(std::int64_t m, std::int64_t n);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  HomologyClass as_class() const { return {m_, n_}; }
  std::int64_t word_length() const { return (m_ < 0 ? -m_ : m_) + n_; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  std::int64_t m_ = 1;
  std::int64_t n_ = 0;
};

/// f_{m,n}(k): 1 on residues 1..m and 2 on residues m+1..m+n modulo m+n.
int oz_letter(std::int64_t m, std::int64_t n, std::int64_t k);

/// W_{m,n}: the product over i = 0..|m|+|n|-1 of x_{f(1 + i|m|)}, with s
/// (resp. t) inverted when m < 0 (resp. n < 0). Throws NotCoprime.
Word oz_word(std::int64_t m, std::int64_t n);

HomologyClass abelianize(const Word& w);

/// Strips matching inverse letters from both ends.
Word cyclic_reduce(const Word& w);

/// Every canonical slope with |m| + |n| <= max_length, ordered by
/// (word length, m, n).
std::vector<Slope> slopes_up_to(std::int64_t max_length);

/// rho(w) as a product of generator images.
Mat2 evaluate(const Representation& rep, const Word& w);

/// Integer evaluation; throws Overflow when an entry exceeds max_digits
/// decimal digits.
IntMat2 evaluate(const IntRepresentation& rep, const Word& w, std::size_t max_digits = 4096);

}  // namespace ptorus
