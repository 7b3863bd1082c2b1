#include "dimalg/extint.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace dimalg {

std::string to_string(ExtInt v) {
    if (v.is_plus_inf()) return "inf";
    if (v.is_minus_inf()) return "-inf";
    return std::to_string(v.finite());
}

std::ostream& operator<<(std::ostream& os, ExtInt v) { return os << to_string(v); }

ExtInt parse_extint(const std::string& text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t.empty()) throw std::invalid_argument("empty extended-integer literal");

    bool negative = false;
    std::string body = t;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    if (body == "inf" || body == "infinity")
        return negative ? ExtInt::minus_inf() : ExtInt::plus_inf();

    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw std::invalid_argument("bad extended-integer literal: " + text);
    std::int64_t v = 0;
    try {
        v = std::stoll(body);
    } catch (const std::exception&) {
        throw std::invalid_argument("extended-integer literal out of range: " + text);
    }
    return ExtInt(negative ? -v : v);
}

} // namespace dimalg
