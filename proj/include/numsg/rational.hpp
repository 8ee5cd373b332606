#ifndef NUMSG_RATIONAL_HPP
#define NUMSG_RATIONAL_HPP

#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace numsg {

/// Exact nonnegative ratio used for census thresholds, so boundary
/// comparisons such as F < (2 + eps) m are decided without rounding.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d)
        : num(n)
        , den(d) {
        if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    /// Accepts "p/q", integers and plain decimals such as "0.05".
    static Rational parse(const std::string& text) {
        const auto bad = [&] { return std::invalid_argument("not a ratio: '" + text + "'"); };
        if (text.empty()) throw bad();
        if (auto slash = text.find('/'); slash != std::string::npos) {
            const auto p = parse_int(text.substr(0, slash));
            const auto q = parse_int(text.substr(slash + 1));
            if (!p || !q || *q <= 0) throw bad();
            return {*p, *q};
        }
        std::int64_t n = 0;
        std::int64_t d = 1;
        bool dot = false;
        bool digits = false;
        for (char c : text) {
            if (c == '.' && !dot) {
                dot = true;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
            if (n > (INT64_MAX - 9) / 10 || (dot && d > INT64_MAX / 10)) throw bad();
            n = n * 10 + (c - '0');
            if (dot) d *= 10;
            digits = true;
        }
        if (!digits) throw bad();
        return {n, d};
    }

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational&, const Rational&) = default;

private:
    static std::optional<std::int64_t> parse_int(const std::string& s) {
        if (s.empty() || s.size() > 18) return std::nullopt;
        std::int64_t v = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    }
};

}  // namespace numsg

#endif  // NUMSG_RATIONAL_HPP
