#ifndef BLOCKSETS_POINT_HPP
#define BLOCKSETS_POINT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "blocksets/error.hpp"

namespace blocksets {

/// Exact integer point of Z^t.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t dim) : c_(dim, 0) {}
  explicit LatticePoint(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}
  LatticePoint(std::initializer_list<std::int64_t> coords) : c_(coords) {}

  std::size_t dim() const noexcept { return c_.size(); }
  std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return c_; }

  std::int64_t sum() const noexcept {
    std::int64_t s = 0;
    for (auto v : c_) s += v;
    return s;
  }

  LatticePoint& operator+=(const LatticePoint& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator-(LatticePoint a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend LatticePoint operator*(std::int64_t k, LatticePoint a) {
    for (auto& v : a.c_) v *= k;
    return a;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  void check(const LatticePoint& o) const {
    if (o.dim() != dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  }

  std::vector<std::int64_t> c_;
};

}  // namespace blocksets

#endif  // BLOCKSETS_POINT_HPP
