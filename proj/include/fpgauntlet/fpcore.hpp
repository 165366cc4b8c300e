// Bit-exact IEEE-754 binary32/binary64 addition under explicit rounding modes.
// All arithmetic is emulated over integer significand/exponent pairs; nothing
// here touches the process FPU rounding state, so every operation is a pure
// function and safe to call concurrently.
//
// Domain restrictions: values are always finite, never NaN, and -0 is
// normalized to +0 at ingestion. Overflow raises instead of saturating.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpg {

enum class FloatFormat { Binary32, Binary64 };
enum class RoundingMode { NearestEven, TowardNegInf, TowardPosInf, TowardZero };

struct FpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OverflowError : FpError {
    using FpError::FpError;
};
struct FormatMismatchError : FpError {
    using FpError::FpError;
};
struct RepresentationError : FpError {
    using FpError::FpError;
};
struct DomainError : FpError {  // NaN/inf rejected at ingestion
    using FpError::FpError;
};

struct FormatSpec {
    const char* name;
    int significand_bits;  // p: 23 or 52 (fraction field width)
    int exponent_bits;     // 8 or 11
    int width;             // 32 or 64
    int bias;
    int64_t emax;  // largest unbiased exponent of a normal number
    int64_t emin;  // smallest unbiased exponent of a normal number
    int64_t qmin;  // emin - p: quantum exponent of the subnormal range
};

const FormatSpec& format_spec(FloatFormat fmt);
const char* format_name(FloatFormat fmt);
const char* mode_name(RoundingMode mode);  // "ne", "rd", "ru", "rz"

/// A finite floating-point number as an explicit bit pattern in a declared
/// format. Round-trips bit-exactly through from_bits()/bits().
class FpValue {
  public:
    FpValue() = default;  // +0 in Binary64

    /// Validates that the pattern is finite (not NaN/inf) and normalizes -0
    /// to +0. Throws DomainError otherwise.
    static FpValue from_bits(uint64_t bits, FloatFormat fmt);
    static FpValue from_double(double v);  // Binary64; v must be finite
    static FpValue from_float(float v);    // Binary32; v must be finite
    static FpValue zero(FloatFormat fmt) { return from_bits(0, fmt); }

    uint64_t bits() const { return bits_; }
    FloatFormat format() const { return format_; }
    bool is_zero() const { return bits_ == 0; }
    bool is_negative() const;

    /// Exact conversion to native double. Only valid when the value is
    /// representable in binary64 (always true for both supported formats).
    double to_double() const;

    // value = sign * mant * 2^q; zero decodes as (+1, 0, qmin)
    struct Decoded {
        int sign;       // +1 or -1
        uint64_t mant;  // includes the hidden bit for normals
        int64_t q;      // quantum exponent
    };
    Decoded decode() const;
    static FpValue encode(int sign, uint64_t mant, int64_t q, FloatFormat fmt);

    std::string to_hex_string() const;  // "0x..." zero-padded to format width

    friend bool operator==(const FpValue& a, const FpValue& b) {
        return a.bits_ == b.bits_ && a.format_ == b.format_;
    }
    friend bool operator!=(const FpValue& a, const FpValue& b) { return !(a == b); }

  private:
    uint64_t bits_ = 0;
    FloatFormat format_ = FloatFormat::Binary64;
};

/// Three-way numeric comparison; formats may differ (comparison is by the
/// exact real values the patterns denote).
int compare_value(const FpValue& a, const FpValue& b);
bool value_less(const FpValue& a, const FpValue& b);
bool value_eq(const FpValue& a, const FpValue& b);

/// IEEE-754 addition of two finite same-format values under the given mode.
/// Bit-identical to round_exact(exact(a) + exact(b), fmt, mode); commutative.
/// Throws FormatMismatchError on mixed formats, OverflowError when the
/// rounded magnitude exceeds the largest finite value.
FpValue add(const FpValue& a, const FpValue& b, RoundingMode mode);

/// Sign flip; exact in every format and mode.
FpValue negate(const FpValue& a);

/// Adjacent representable values. next_up(+0) is the smallest positive
/// subnormal, next_down(+0) its negation. Throws OverflowError when stepping
/// beyond the largest finite magnitude.
FpValue next_up(const FpValue& a);
FpValue next_down(const FpValue& a);

/// omega: smallest representable positive value whose successor is omega+2,
/// i.e. 2^(p+1): 2^24 for Binary32, 2^53 for Binary64.
FpValue omega(FloatFormat fmt);
/// Smallest positive subnormal of the format.
FpValue min_subnormal(FloatFormat fmt);
FpValue max_finite(FloatFormat fmt);

bool representable_in(const FpValue& v, FloatFormat fmt);
/// Exact format conversion; throws RepresentationError when lossy.
FpValue convert(const FpValue& v, FloatFormat fmt);

}  // namespace fpg
