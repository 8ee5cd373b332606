#ifndef NUMSG_PARSE_HPP
#define NUMSG_PARSE_HPP

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace numsg {

/// Comma-separated integers with inclusive ranges, e.g. "1..12,19,21".
/// Whitespace around items is ignored; an empty string yields an empty list.
inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto to_int = [](std::string_view s) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
            throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
        return v;
    };
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = trim(text.substr(start, comma - start));
        if (auto dots = item.find(".."); dots != std::string_view::npos) {
            const int lo = to_int(trim(item.substr(0, dots)));
            const int hi = to_int(trim(item.substr(dots + 2)));
            if (hi < lo) throw std::invalid_argument("empty range: '" + std::string(item) + "'");
            for (int x = lo; x <= hi; ++x) out.push_back(x);
        } else {
            out.push_back(to_int(item));
        }
        start = comma + 1;
    }
    return out;
}

}  // namespace numsg

#endif  // NUMSG_PARSE_HPP
