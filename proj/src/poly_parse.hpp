#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaincodes::detail {

/// Parses an integer polynomial in one variable such as "3+2*x-x^2" or "y^2+1".
/// Returns coefficients with the constant term first.
inline std::vector<long long> parse_int_poly(const std::string& raw, char var) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) throw std::invalid_argument("empty polynomial");
    std::vector<long long> coeffs;
    std::size_t pos = 0;
    auto add_term = [&](long long c, std::size_t deg) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] += c;
    };
    while (pos < text.size()) {
        long long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos >= text.size()) throw std::invalid_argument("dangling sign in '" + raw + "'");
        long long c = 1;
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            c = std::stoll(text.substr(pos, end - pos));
            pos = end;
            have_number = true;
        }
        std::size_t deg = 0;
        if (pos < text.size() && text[pos] == '*') {
            if (!have_number) throw std::invalid_argument("misplaced '*' in '" + raw + "'");
            ++pos;
            if (pos >= text.size() || text[pos] != var)
                throw std::invalid_argument("expected variable after '*' in '" + raw + "'");
        }
        if (pos < text.size() && text[pos] == var) {
            ++pos;
            deg = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t end = pos;
                while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
                if (end == pos) throw std::invalid_argument("missing exponent in '" + raw + "'");
                deg = std::stoul(text.substr(pos, end - pos));
                pos = end;
            }
        } else if (!have_number) {
            throw std::invalid_argument("cannot parse term in '" + raw + "'");
        }
        if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
            throw std::invalid_argument("unexpected character in '" + raw + "'");
        add_term(sign * c, deg);
    }
    return coeffs;
}

}  // namespace chaincodes::detail
