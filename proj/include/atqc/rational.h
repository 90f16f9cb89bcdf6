// Copyright 2026 The atqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ATQC_RATIONAL_H
#define ATQC_RATIONAL_H

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "atqc/error.h"

namespace atqc {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
   public:
    constexpr Rational() = default;
    constexpr Rational(int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    constexpr Rational(int64_t num, int64_t den) : num_(num), den_(den) {
        if (den_ == 0) {
            throw_invalid("rational with zero denominator");
        }
        normalize();
    }

    constexpr int64_t num() const {
        return num_;
    }
    constexpr int64_t den() const {
        return den_;
    }
    constexpr bool is_integer() const {
        return den_ == 1;
    }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator-(Rational a, Rational b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator*(Rational a, Rational b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend constexpr Rational operator/(Rational a, Rational b) {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend constexpr bool operator==(Rational a, Rational b) = default;
    friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream &operator<<(std::ostream &out, Rational r) {
        return out << r.str();
    }

   private:
    constexpr void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

}  // namespace atqc

#endif
