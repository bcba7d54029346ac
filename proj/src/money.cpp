#include "netredist/money.hpp"

#include "netredist/errors.hpp"

#include <cctype>

namespace netredist {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// BigInt's string constructor reads a leading 0 as an octal prefix; trim it
BigInt from_digits(const std::string& s) {
    size_t first = s.find_first_not_of('0');
    if (first == std::string::npos) return BigInt(0);
    return BigInt(s.substr(first));
}

[[noreturn]] void bad(const std::string& text) {
    throw MalformedInputError(InputErrorCode::bad_money, "cannot parse money literal '" + text + "'");
}

}  // namespace

Money parse_money(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) bad(text);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(s.begin());
    }

    Money out;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        BigInt d = from_digits(den);
        if (d == 0) bad(text);
        out = Money(from_digits(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac)) bad(text);
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        out = Money(from_digits(whole) * scale + from_digits(frac), scale);
    } else {
        if (!all_digits(s)) bad(text);
        out = Money(from_digits(s));
    }
    return negative ? Money(-out) : out;
}

std::string format_money(const Money& value) {
    if (value < 0) return "-" + format_money(Money(-value));
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    if (den == 1) return num.str();
    if (BigInt(1000) % den == 0) {
        BigInt milli = num * (BigInt(1000) / den);  // exact: den | 1000
        std::string digits = BigInt(milli % 1000).str();
        while (digits.size() < 3) digits.insert(digits.begin(), '0');
        while (digits.back() == '0') digits.pop_back();
        return BigInt(milli / 1000).str() + "." + digits;
    }
    return num.str() + "/" + den.str();
}

long long money_floor(const Money& value) {
    BigInt q = numerator(value) / denominator(value);
    if (value < 0 && q * denominator(value) != numerator(value)) q -= 1;
    return q.convert_to<long long>();
}

}  // namespace netredist
