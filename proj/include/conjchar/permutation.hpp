#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "base.hpp"
#include "numeric.hpp"

namespace conjchar {

using Point = std::uint16_t;

/// A permutation of {0, ..., degree-1} stored as its image list.
/// Products act left to right: (a * b) means "apply a, then b".
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (Point p : img_) {
      if (p >= img_.size() || seen[p]) throw InputError("non-bijective image list");
      seen[p] = 1;
    }
  }

  static Permutation identity(int degree) {
    Permutation p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), Point{0});
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// this, then b.
  Permutation then(const Permutation& b) const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = b.img_[img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
    return r;
  }

  /// t^-1 * this * t.
  Permutation conjugated_by(const Permutation& t) const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[t.img_[i]] = t.img_[img_[i]];
    return r;
  }

  Permutation power(long long e) const {
    long long n = order();
    e %= n;
    if (e < 0) e += n;
    Permutation acc = identity(degree()), base = *this;
    while (e) {
      if (e & 1) acc = acc.then(base);
      base = base.then(base);
      e >>= 1;
    }
    return acc;
  }

  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<Point>> cs;
    std::vector<char> seen(img_.size(), 0);
    for (Point s = 0; s < img_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<Point> c;
      Point x = s;
      do {
        seen[x] = 1;
        c.push_back(x);
        x = img_[x];
      } while (x != s);
      if (c.size() > 1 || include_fixed) cs.push_back(std::move(c));
    }
    return cs;
  }

  long long order() const {
    long long o = 1;
    for (auto& c : cycles()) o = ll_lcm(o, static_cast<long long>(c.size()));
    return o;
  }

  /// Multiset of cycle lengths, descending, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> t;
    int moved = 0;
    for (auto& c : cycles()) {
      t.push_back(static_cast<int>(c.size()));
      moved += static_cast<int>(c.size());
    }
    t.insert(t.end(), degree() - moved, 1);
    std::sort(t.rbegin(), t.rend());
    return t;
  }

  /// Order-preserving byte encoding (big-endian pairs above degree 255).
  std::string pack() const {
    std::string s;
    if (img_.size() <= 256) {
      s.resize(img_.size());
      for (size_t i = 0; i < img_.size(); ++i) s[i] = static_cast<char>(img_[i]);
    } else {
      s.resize(2 * img_.size());
      for (size_t i = 0; i < img_.size(); ++i) {
        s[2 * i] = static_cast<char>(img_[i] >> 8);
        s[2 * i + 1] = static_cast<char>(img_[i] & 0xff);
      }
    }
    return s;
  }

  static Permutation unpack(const std::string& s, int degree) {
    Permutation p;
    p.img_.resize(degree);
    if (degree <= 256) {
      for (int i = 0; i < degree; ++i) p.img_[i] = static_cast<unsigned char>(s[i]);
    } else {
      for (int i = 0; i < degree; ++i)
        p.img_[i] = static_cast<Point>((static_cast<unsigned char>(s[2 * i]) << 8) |
                                       static_cast<unsigned char>(s[2 * i + 1]));
    }
    return p;
  }

  /// `(1,2,3)(4,5)` with 1-based points; `()` for the identity.
  std::string cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (auto& c : cs) {
      os << '(';
      for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
      os << ')';
    }
    return os.str();
  }

  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (auto& c : cycles)
      for (size_t i = 0; i < c.size(); ++i) {
        int from = c[i], to = c[(i + 1) % c.size()];
        if (from < 0 || from >= degree) throw InputError("cycle point out of range");
        img[from] = static_cast<Point>(to);
      }
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<Point> img_;
};

}  // namespace conjchar
