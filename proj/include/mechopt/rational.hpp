#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace mechopt {

// Exact rational scalar. Arbitrary precision, always in canonical reduced
// form (positive denominator, gcd 1) courtesy of cpp_rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Renders "p/q", or just "p" when q = 1.
std::string render_rat(const Rat& r);

/// Parses "p", "p/q", or a decimal string like "-3.25" to an exact rational.
Rat parse_rat(const std::string& s);

// Rational extended with a single +infinity element. Used for unbounded box
// upper ends and absent graph edges. +infinity compares greater than every
// finite value and is absorbing under addition.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(Rat v) : value_(std::move(v)) {}
  ExtRat(int v) : value_(v) {}

  static ExtRat infinity() {
    ExtRat e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }

  const Rat& finite() const {
    if (infinite_) throw std::logic_error("ExtRat: finite() on +infinity");
    return value_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRat(a.value_ + b.value_);
  }

 private:
  bool infinite_ = false;
  Rat value_;
};

std::string render_ext(const ExtRat& e);

}  // namespace mechopt
