#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rfft
{
    /// Exact rational number used for every closed-form rate and overhead.
    using Rational = boost::multiprecision::cpp_rational;
    using BigInt = boost::multiprecision::cpp_int;

    enum class Rounding
    {
        nearest,  // half away from zero
        truncate, // toward zero
        ceiling,
    };

    /// Parses a decimal literal ("0.93", "30.72e6", "-1.5E-3", "7/100") exactly.
    /// Throws std::invalid_argument on malformed input.
    Rational parse_decimal(std::string_view text);

    /// Rational from an integer ratio.
    Rational ratio(std::int64_t num, std::int64_t den = 1);

    double to_double(const Rational &value);

    BigInt floor_int(const Rational &value);
    BigInt ceil_int(const Rational &value);

    /// Quantizes `value` to a multiple of 10^-decimals.
    Rational quantize(const Rational &value, int decimals, Rounding mode);

    /// Quantizes `value` to a multiple of `step`.
    Rational quantize_to_step(const Rational &value, const Rational &step, Rounding mode);

    /// Fixed-point decimal rendering, e.g. format_decimal(2/3, 3) == "0.667".
    std::string format_decimal(const Rational &value, int decimals,
                               Rounding mode = Rounding::nearest);

    std::int64_t to_int64(const BigInt &value);
} // namespace rfft
