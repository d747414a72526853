#pragma once

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidgt {

/// Freely reduced word in a finitely generated free group.
/// Letters are signed 1-based generator indices; -i is the inverse of generator i.
/// Words are reduced eagerly so equality of elements is equality of letter vectors.
class FreeWord {
 public:
  FreeWord() : rank_(0) {}

  explicit FreeWord(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("FreeWord: negative rank");
  }

  FreeWord(int rank, const std::vector<int32_t>& letters) : FreeWord(rank) {
    letters_.reserve(letters.size());
    for (int32_t g : letters) push(g);
  }

  int rank() const { return rank_; }
  const std::vector<int32_t>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  bool operator==(const FreeWord& o) const {
    return rank_ == o.rank_ && letters_ == o.letters_;
  }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }

  /// Append one letter with free cancellation.
  void push(int32_t g) {
    if (g == 0 || std::abs(g) > rank_)
      throw std::invalid_argument("FreeWord: generator index out of range");
    if (!letters_.empty() && letters_.back() == -g)
      letters_.pop_back();
    else
      letters_.push_back(g);
  }

  void push_word(const FreeWord& w, bool inverted = false) {
    if (w.rank_ != rank_) throw std::invalid_argument("FreeWord: rank mismatch");
    if (!inverted) {
      for (int32_t g : w.letters_) push(g);
    } else {
      for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
    }
  }

  static FreeWord generator(int rank, int i) {
    FreeWord w(rank);
    w.push(i);
    return w;
  }

  friend FreeWord multiply(const FreeWord& a, const FreeWord& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("multiply: rank mismatch");
    FreeWord r = a;
    r.push_word(b);
    return r;
  }

  friend FreeWord invert(const FreeWord& a) {
    FreeWord r(a.rank_);
    for (auto it = a.letters_.rbegin(); it != a.letters_.rend(); ++it)
      r.letters_.push_back(-*it);
    return r;
  }

  friend FreeWord power(const FreeWord& a, long long k) {
    FreeWord base = k < 0 ? invert(a) : a;
    long long n = k < 0 ? -k : k;
    FreeWord r(a.rank_);
    for (long long j = 0; j < n; ++j) r.push_word(base);
    return r;
  }

  friend FreeWord conjugate(const FreeWord& a, const FreeWord& by) {
    FreeWord r = by;
    r.push_word(a);
    r.push_word(by, /*inverted=*/true);
    return r;
  }

  friend FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    r.push_word(b);
    r.push_word(a, true);
    r.push_word(b, true);
    return r;
  }

 private:
  int rank_;
  std::vector<int32_t> letters_;
};

/// Build the reduced word from a raw signed-index sequence.
inline FreeWord reduce(const std::vector<int32_t>& letters, int rank) {
  return FreeWord(rank, letters);
}

/// Homomorphic image of f under a generator assignment into an arbitrary group,
/// given by its unit and multiply/invert callables.
template <class Elem, class MulFn, class InvFn>
Elem substitute(const FreeWord& f, const std::vector<Elem>& images, Elem unit,
                MulFn mul, InvFn inv) {
  if (static_cast<int>(images.size()) != f.rank())
    throw std::invalid_argument("substitute: arity mismatch");
  Elem acc = unit;
  for (int32_t g : f.letters()) {
    const Elem& img = images[static_cast<std::size_t>(std::abs(g)) - 1];
    acc = g > 0 ? mul(acc, img) : mul(acc, inv(img));
  }
  return acc;
}

/// Substitution with free-group targets; agrees with composition of words.
inline FreeWord substitute(const FreeWord& f, const std::vector<FreeWord>& images) {
  if (static_cast<int>(images.size()) != f.rank())
    throw std::invalid_argument("substitute: arity mismatch");
  int target_rank = images.empty() ? 0 : images.front().rank();
  FreeWord acc(target_rank);
  for (int32_t g : f.letters())
    acc.push_word(images[static_cast<std::size_t>(std::abs(g)) - 1], g < 0);
  return acc;
}

/// Signed count of occurrences of each of the two generators of a rank-2 word.
inline std::pair<long long, long long> exponent_sums(const FreeWord& f) {
  if (f.rank() != 2) throw std::invalid_argument("exponent_sums: rank must be 2");
  long long ex = 0, ey = 0;
  for (int32_t g : f.letters()) {
    if (std::abs(g) == 1)
      ex += g > 0 ? 1 : -1;
    else
      ey += g > 0 ? 1 : -1;
  }
  return {ex, ey};
}

/// Text format: whitespace-separated signed integers; empty string = identity.
inline std::string to_text(const FreeWord& w) {
  std::ostringstream os;
  bool first = true;
  for (int32_t g : w.letters()) {
    if (!first) os << ' ';
    os << g;
    first = false;
  }
  return os.str();
}

inline FreeWord parse_free_word(const std::string& text, int rank) {
  std::istringstream is(text);
  std::vector<int32_t> letters;
  long long g;
  while (is >> g) {
    if (g == 0 || std::llabs(g) > rank)
      throw std::invalid_argument("parse_free_word: index out of range: " +
                                  std::to_string(g));
    letters.push_back(static_cast<int32_t>(g));
  }
  if (!is.eof()) throw std::invalid_argument("parse_free_word: bad token");
  return FreeWord(rank, letters);
}

}  // namespace braidgt
