#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidgt {

/// Bijection of {0,..,n-1}. Composition is diagrammatic: (a.then(b))(i) = b(a(i)).
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int32_t> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (int32_t v : img_) {
      if (v < 0 || v >= static_cast<int32_t>(img_.size()) || seen[v])
        throw std::invalid_argument("Perm: image is not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int32_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
  }

  static Perm transposition(int n, int a, int b) {
    Perm p = identity(n);
    std::swap(p.img_[a], p.img_[b]);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int32_t operator()(int32_t i) const { return img_[i]; }
  const std::vector<int32_t>& image() const { return img_; }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  Perm then(const Perm& next) const {
    if (next.size() != size()) throw std::invalid_argument("Perm: size mismatch");
    std::vector<int32_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[i] = next.img_[img_[i]];
    Perm r;
    r.img_ = std::move(v);
    return r;
  }

  Perm inverse() const {
    std::vector<int32_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int32_t>(i);
    Perm r;
    r.img_ = std::move(v);
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int32_t>(i)) return false;
    return true;
  }

  /// One-line notation with 1-based entries, e.g. "(2 1 3)".
  std::string one_line() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (i) os << ' ';
      os << img_[i] + 1;
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<int32_t> img_;
};

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<int32_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace braidgt
