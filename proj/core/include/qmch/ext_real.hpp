#pragma once

#include <cassert>
#include <compare>

namespace qmch {

/// Non-negative extended real with an exact infinity sentinel. Decay
/// functions return these; infinity never arises from floating overflow.
class ExtReal {
 public:
  constexpr ExtReal() : value_(0.0), infinite_(false) {}
  constexpr explicit ExtReal(double v) : value_(v), infinite_(false) {}

  static constexpr ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }

  double value() const {
    assert(!infinite_);
    return value_;
  }

  /// value() with infinities collapsed to the given substitute.
  constexpr double value_or(double substitute) const {
    return infinite_ ? substitute : value_;
  }

  friend constexpr ExtReal operator*(ExtReal a, ExtReal b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtReal(a.value_ * b.value_);
  }

  friend constexpr bool operator==(ExtReal a, ExtReal b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.value_ == b.value_;
  }

  friend constexpr bool operator<(ExtReal a, ExtReal b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

  friend constexpr bool operator<=(ExtReal a, ExtReal b) { return a < b || a == b; }

  friend constexpr bool operator<=(ExtReal a, double b) {
    return !a.infinite_ && a.value_ <= b;
  }

 private:
  double value_;
  bool infinite_;
};

}  // namespace qmch
