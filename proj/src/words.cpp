#include "ptorus/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ptorus/error.hpp"

namespace ptorus {

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (const Letter& l : letters) w.push_back(l);
  return w;
}

Word Word::parse(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    Letter l;
    if (token[0] == 's') {
      l.gen = Generator::s;
    } else if (token[0] == 't') {
      l.gen = Generator::t;
    } else {
      throw Error(ErrorCode::InvalidArgument, "bad letter '" + token + "'");
    }
    const std::string_view rest = std::string_view(token).substr(1);
    if (rest == "^-1") {
      l.exp = -1;
    } else if (!rest.empty()) {
      throw Error(ErrorCode::InvalidArgument, "bad letter '" + token + "'");
    }
    w.push_back(l);
  }
  return w;
}

void Word::push_back(const Letter& letter) {
  if (!letters_.empty() && letters_.back().cancels(letter)) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::rotated(std::size_t k) const {
  Word w;
  if (letters_.empty()) return w;
  k %= letters_.size();
  w.letters_.reserve(letters_.size());
  w.letters_.insert(w.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return w;
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen == Generator::s ? 's' : 't';
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

Word operator*(const Word& l, const Word& r) {
  Word w = l;
  for (const Letter& letter : r) w.push_back(letter);
  return w;
}

Slope::Slope(std::int64_t m, std::int64_t n) {
  if (gcd64(m, n) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "(" + std::to_string(m) + ", " + std::to_string(n) + ") is not primitive");
  }
  if (n < 0 || (n == 0 && m < 0)) {
    m = -m;
    n = -n;
  }
  m_ = m;
  n_ = n;
}

int oz_letter(std::int64_t m, std::int64_t n, std::int64_t k) {
  const std::int64_t period = m + n;
  std::int64_t r = ((k - 1) % period + period) % period + 1;  // in 1..m+n
  return r <= m ? 1 : 2;
}

Word oz_word(std::int64_t m, std::int64_t n) {
  if (gcd64(m, n) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "(" + std::to_string(m) + ", " + std::to_string(n) + ") is not primitive");
  }
  const std::int64_t am = m < 0 ? -m : m;
  const std::int64_t an = n < 0 ? -n : n;
  const std::int8_t s_exp = m < 0 ? -1 : 1;
  const std::int8_t t_exp = n < 0 ? -1 : 1;
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(am + an));
  for (std::int64_t i = 0; i < am + an; ++i) {
    if (oz_letter(am, an, 1 + i * am) == 1) {
      letters.push_back({Generator::s, s_exp});
    } else {
      letters.push_back({Generator::t, t_exp});
    }
  }
  return Word::from_letters(letters);
}

HomologyClass abelianize(const Word& w) {
  HomologyClass h;
  for (const Letter& l : w) {
    (l.gen == Generator::s ? h.m : h.n) += l.exp;
  }
  return h;
}

Word cyclic_reduce(const Word& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(w.begin() + static_cast<std::ptrdiff_t>(lo),
                           w.begin() + static_cast<std::ptrdiff_t>(hi));
  return Word::from_letters(core);
}

std::vector<Slope> slopes_up_to(std::int64_t max_length) {
  std::vector<Slope> out;
  if (max_length >= 1) out.emplace_back(1, 0);
  for (std::int64_t len = 1; len <= max_length; ++len) {
    for (std::int64_t m = -len; m <= len; ++m) {
      const std::int64_t n = len - (m < 0 ? -m : m);
      if (n <= 0) continue;
      if (gcd64(m, n) == 1) out.emplace_back(m, n);
    }
  }
  std::sort(out.begin(), out.end(), [](const Slope& l, const Slope& r) {
    if (l.word_length() != r.word_length()) return l.word_length() < r.word_length();
    return l < r;
  });
  return out;
}

namespace {

template <class Mat, class Rep>
Mat letter_image(const Rep& rep, const Letter& l) {
  const Mat& g = l.gen == Generator::s ? rep.a : rep.b;
  return l.exp > 0 ? g : g.inverse();
}

}  // namespace

Mat2 evaluate(const Representation& rep, const Word& w) {
  Mat2 acc = Mat2::identity();
  for (const Letter& l : w) acc = acc * letter_image<Mat2>(rep, l);
  return acc;
}

IntMat2 evaluate(const IntRepresentation& rep, const Word& w, std::size_t max_digits) {
  IntMat2 acc = IntMat2::identity();
  for (const Letter& l : w) {
    acc = acc * letter_image<IntMat2>(rep, l);
    for (const BigInt* e : {&acc.a, &acc.b, &acc.c, &acc.d}) {
      if (decimal_digits(*e) > max_digits) {
        throw Error(ErrorCode::Overflow,
                    "matrix entry exceeds " + std::to_string(max_digits) + " digits");
      }
    }
  }
  return acc;
}

}  // namespace ptorus
