#include "rfft/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

namespace rfft
{
    namespace
    {
        BigInt pow10(int exponent)
        {
            BigInt result = 1;
            for (int i = 0; i < exponent; ++i)
            {
                result *= 10;
            }
            return result;
        }

        [[noreturn]] void bad_literal(std::string_view text)
        {
            throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
        }

        Rational parse_plain(std::string_view text)
        {
            std::size_t pos = 0;
            bool negative = false;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            {
                negative = text[pos] == '-';
                ++pos;
            }

            BigInt mantissa = 0;
            int fraction_digits = 0;
            bool seen_digit = false;
            bool seen_point = false;
            for (; pos < text.size(); ++pos)
            {
                const char c = text[pos];
                if (std::isdigit(static_cast<unsigned char>(c)))
                {
                    mantissa = mantissa * 10 + (c - '0');
                    seen_digit = true;
                    if (seen_point)
                    {
                        ++fraction_digits;
                    }
                }
                else if (c == '.' && !seen_point)
                {
                    seen_point = true;
                }
                else
                {
                    break;
                }
            }
            if (!seen_digit)
            {
                bad_literal(text);
            }

            int exponent = 0;
            if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E'))
            {
                ++pos;
                bool exp_negative = false;
                if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
                {
                    exp_negative = text[pos] == '-';
                    ++pos;
                }
                if (pos >= text.size())
                {
                    bad_literal(text);
                }
                for (; pos < text.size(); ++pos)
                {
                    const char c = text[pos];
                    if (!std::isdigit(static_cast<unsigned char>(c)) || exponent > 4000)
                    {
                        bad_literal(text);
                    }
                    exponent = exponent * 10 + (c - '0');
                }
                if (exp_negative)
                {
                    exponent = -exponent;
                }
            }
            if (pos != text.size())
            {
                bad_literal(text);
            }

            const int scale = exponent - fraction_digits;
            Rational value = scale >= 0 ? Rational(mantissa * pow10(scale))
                                        : Rational(mantissa, pow10(-scale));
            return negative ? Rational(-value) : value;
        }
    } // namespace

    Rational parse_decimal(std::string_view text)
    {
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        {
            text.remove_prefix(1);
        }
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        {
            text.remove_suffix(1);
        }
        if (text.empty())
        {
            bad_literal(text);
        }
        if (const auto slash = text.find('/'); slash != std::string_view::npos)
        {
            const Rational num = parse_plain(text.substr(0, slash));
            const Rational den = parse_plain(text.substr(slash + 1));
            if (den == 0)
            {
                bad_literal(text);
            }
            return num / den;
        }
        return parse_plain(text);
    }

    Rational ratio(std::int64_t num, std::int64_t den)
    {
        if (den == 0)
        {
            throw std::invalid_argument("ratio: zero denominator");
        }
        return Rational(BigInt(num), BigInt(den));
    }

    double to_double(const Rational &value)
    {
        return value.convert_to<double>();
    }

    BigInt floor_int(const Rational &value)
    {
        const BigInt num = boost::multiprecision::numerator(value);
        const BigInt den = boost::multiprecision::denominator(value);
        BigInt q = num / den;
        if (num % den != 0 && num < 0)
        {
            q -= 1;
        }
        return q;
    }

    BigInt ceil_int(const Rational &value)
    {
        return -floor_int(-value);
    }

    Rational quantize_to_step(const Rational &value, const Rational &step, Rounding mode)
    {
        if (step <= 0)
        {
            throw std::invalid_argument("quantize_to_step: step must be positive");
        }
        const Rational units = value / step;
        BigInt n;
        switch (mode)
        {
        case Rounding::truncate:
            n = units >= 0 ? floor_int(units) : ceil_int(units);
            break;
        case Rounding::ceiling:
            n = ceil_int(units);
            break;
        case Rounding::nearest:
        default:
            n = units >= 0 ? floor_int(units + Rational(1, 2)) : ceil_int(units - Rational(1, 2));
            break;
        }
        return Rational(n) * step;
    }

    Rational quantize(const Rational &value, int decimals, Rounding mode)
    {
        const Rational step = decimals >= 0 ? Rational(BigInt(1), pow10(decimals)) : Rational(pow10(-decimals));
        return quantize_to_step(value, step, mode);
    }

    std::string format_decimal(const Rational &value, int decimals, Rounding mode)
    {
        const Rational q = quantize(value, decimals, mode);
        const BigInt scaled = floor_int(q * Rational(pow10(decimals)) + Rational(0));
        BigInt magnitude = scaled < 0 ? BigInt(-scaled) : scaled;
        std::string digits = magnitude.str();
        if (decimals > 0)
        {
            if (static_cast<int>(digits.size()) <= decimals)
            {
                digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
            }
            digits.insert(digits.size() - static_cast<std::size_t>(decimals), 1, '.');
        }
        if (scaled < 0)
        {
            digits.insert(0, 1, '-');
        }
        return digits;
    }

    std::int64_t to_int64(const BigInt &value)
    {
        if (value > std::numeric_limits<std::int64_t>::max() ||
            value < std::numeric_limits<std::int64_t>::min())
        {
            throw std::overflow_error("value does not fit in 64 bits: " + value.str());
        }
        return value.convert_to<std::int64_t>();
    }
} // namespace rfft
