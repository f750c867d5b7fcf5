#include <posmon/integer.hpp>

#include <posmon/error.hpp>

#include <vector>

namespace posmon {

Int int_isqrt(const Int& a) {
    if (a < 0) fail(ErrorCode::InvalidArgument, "isqrt of negative value");
    if (a == 0) return 0;
    return boost::multiprecision::sqrt(a);
}

bool is_perfect_square(const Int& a) {
    if (a < 0) return false;
    Int r = int_isqrt(a);
    return r * r == a;
}

std::vector<Int> positive_divisors(const Int& a) {
    Int n = int_abs(a);
    std::vector<Int> small, large;
    if (n == 0) return small;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

Int int_from_string(const std::string& text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) fail(ErrorCode::ParseError, "sign without digits: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            fail(ErrorCode::ParseError, "bad integer literal: '" + text + "'");
    }
    return Int(text);
}

}  // namespace posmon
