// Arbitrary-precision dyadic rationals (mant * 2^exp) used as the exact
// validation oracle for the emulated floating-point operations. Every finite
// FpValue embeds exactly, and the type is closed under +, -, *.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "fpgauntlet/fpcore.hpp"

namespace fpg {

class ExactValue {
  public:
    using BigInt = boost::multiprecision::cpp_int;

    ExactValue() = default;  // zero
    explicit ExactValue(int64_t v) : mant_(v) { normalize(); }
    ExactValue(BigInt mant, int64_t exp) : mant_(std::move(mant)), exp_(exp) { normalize(); }

    static ExactValue from_fp(const FpValue& v);
    static ExactValue pow2(int64_t e) { return ExactValue(BigInt(1), e); }

    ExactValue operator+(const ExactValue& o) const;
    ExactValue operator-(const ExactValue& o) const;
    ExactValue operator*(const ExactValue& o) const;
    ExactValue operator-() const;

    bool is_zero() const { return mant_.is_zero(); }
    int sign() const { return mant_.sign(); }
    int cmp(const ExactValue& o) const { return (*this - o).sign(); }
    bool operator==(const ExactValue& o) const { return cmp(o) == 0; }
    bool operator<(const ExactValue& o) const { return cmp(o) < 0; }
    bool operator<=(const ExactValue& o) const { return cmp(o) <= 0; }

    const BigInt& mant() const { return mant_; }
    int64_t exp() const { return exp_; }

    /// Dyadic literal: "0", "5", "-3*2^-2", "2^53".
    std::string to_string() const;

  private:
    void normalize();  // mant odd or zero; zero has exp 0

    BigInt mant_ = 0;
    int64_t exp_ = 0;
};

/// Rounds an exact dyadic value to the format under the mode, per IEEE-754
/// semantics. This is the slow reference path that add() is tested against.
/// Throws OverflowError when the rounded magnitude exceeds the largest
/// finite value of the format.
FpValue round_exact(const ExactValue& q, FloatFormat fmt, RoundingMode mode);

/// True iff q is exactly representable in fmt.
bool exactly_representable(const ExactValue& q, FloatFormat fmt);

}  // namespace fpg
