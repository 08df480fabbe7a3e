#pragma once

#include <string>

#include "wpd/errors.hpp"
#include "wpd/rational.hpp"

namespace wpd {

// The twist: either a concrete rational number or the symbolic class of a
// non-integral scalar ("generic"). The symbolic twist only ever answers
// integrality and integer-set membership questions, and answers them false.
class TwistParameter {
public:
  static TwistParameter rational(const Rat &v) { return TwistParameter(v); }
  static TwistParameter generic() { return TwistParameter(); }

  static TwistParameter parse(const std::string &text) {
    if (text == "generic")
      return generic();
    return rational(parse_rational(text));
  }

  bool is_symbolic() const { return symbolic_; }
  bool is_integer() const { return !symbolic_ && wpd::is_integer(value_); }

  const Rat &value() const {
    if (symbolic_)
      throw Error("symbolic twist has no rational value");
    return value_;
  }

  // integer value, valid only when is_integer()
  long integer() const {
    if (!is_integer())
      throw Error("twist is not an integer");
    if (!value_.get_num().fits_slong_p())
      throw Error("twist exceeds the supported integer range");
    return static_cast<long>(value_.get_num().get_si());
  }

  std::string str() const { return symbolic_ ? "generic" : value_.get_str(); }

  friend bool operator==(const TwistParameter &a, const TwistParameter &b) {
    if (a.symbolic_ != b.symbolic_)
      return false;
    return a.symbolic_ || a.value_ == b.value_;
  }

private:
  TwistParameter() : symbolic_(true), value_(0) {}
  explicit TwistParameter(const Rat &v) : symbolic_(false), value_(v) {}

  bool symbolic_;
  Rat value_;
};

} // namespace wpd
