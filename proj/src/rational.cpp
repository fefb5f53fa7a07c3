#include "mechopt/rational.hpp"

#include <cctype>

namespace mechopt {

std::string render_rat(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

std::string render_ext(const ExtRat& e) {
  return e.is_infinite() ? "inf" : render_rat(e.finite());
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& input) {
  std::string s = input;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw ParseError("empty rational literal: '" + input + "'");

  Rat magnitude;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("bad rational literal: '" + input + "'");
    Int d(den);
    if (d == 0) throw ParseError("zero denominator: '" + input + "'");
    magnitude = Rat(Int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw ParseError("bad decimal literal: '" + input + "'");
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    magnitude = Rat(Int(whole) * scale + Int(frac), scale);
  } else {
    if (!all_digits(s)) throw ParseError("bad integer literal: '" + input + "'");
    magnitude = Rat(Int(s));
  }
  return negative ? Rat(-magnitude) : magnitude;
}

}  // namespace mechopt
