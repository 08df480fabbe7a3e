#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wpd/errors.hpp"

namespace wpd {

// The grading weights d_0 <= ... <= d_n, n >= 1. Stored sorted; the gcd and
// the sum are cached because nearly every decision below consults them.
class WeightSystem {
public:
  explicit WeightSystem(std::vector<long> weights) : weights_(std::move(weights)) {
    if (weights_.size() < 2)
      throw Error("need at least two weights");
    for (long d : weights_)
      if (d < 1)
        throw Error("weights must be positive");
    std::sort(weights_.begin(), weights_.end());
    gcd_ = 0;
    sum_ = 0;
    for (long d : weights_) {
      gcd_ = std::gcd(gcd_, d);
      sum_ += d;
    }
  }

  const std::vector<long> &weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); } // n + 1 variables
  long operator[](std::size_t i) const { return weights_[i]; }
  long gcd() const { return gcd_; }
  long sum() const { return sum_; }
  long max() const { return weights_.back(); }
  long min() const { return weights_.front(); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(weights_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const WeightSystem &a, const WeightSystem &b) {
    return a.weights_ == b.weights_;
  }

private:
  std::vector<long> weights_;
  long gcd_;
  long sum_;
};

} // namespace wpd
