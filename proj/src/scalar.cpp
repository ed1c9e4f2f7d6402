#include "trop/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace trop {

MaxPlus mp_add(const MaxPlus& x, const MaxPlus& y) {
    if (x.is_neg_inf()) return y;
    if (y.is_neg_inf()) return x;
    return MaxPlus::of(std::max(x.value(), y.value()));
}

MaxPlus mp_mul(const MaxPlus& x, const MaxPlus& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) return MaxPlus::neg_inf();
    return MaxPlus::of(x.value() + y.value());
}

Scalar add(const Scalar& x, const Scalar& y) {
    if (x.is_neg_inf()) return y;
    if (y.is_neg_inf()) return x;
    if (x.magnitude() == y.magnitude()) return Scalar::ghost(x.magnitude());
    return std::max(x, y);
}

Scalar mul(const Scalar& x, const Scalar& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) return Scalar::neg_inf();
    Rational m = x.magnitude() + y.magnitude();
    if (x.has_ghost_tag() || y.has_ghost_tag()) return Scalar::ghost(std::move(m));
    return Scalar::real(std::move(m));
}

Scalar div(const Scalar& x, const Scalar& y) {
    if (y.is_neg_inf()) throw DomainError("division by -inf");
    if (x.is_neg_inf()) return Scalar::neg_inf();
    Rational m = x.magnitude() - y.magnitude();
    if (x.has_ghost_tag() || y.has_ghost_tag()) return Scalar::ghost(std::move(m));
    return Scalar::real(std::move(m));
}

Scalar ghost(const Scalar& x) {
    if (x.is_neg_inf()) return x;
    return Scalar::ghost(x.magnitude());
}

MaxPlus realize(const Scalar& x) {
    if (x.is_neg_inf()) return MaxPlus::neg_inf();
    return MaxPlus::of(x.magnitude());
}

Scalar project(const Scalar& x) {
    if (x.is_neg_inf()) return x;
    return Scalar::real(x.magnitude());
}

bool is_ghost(const Scalar& x) { return !x.is_real(); }

std::string to_string(const Scalar& x) {
    if (x.is_neg_inf()) return "-inf";
    std::string s = x.magnitude().str();
    if (x.has_ghost_tag()) s += 'g';
    return s;
}

std::string to_string(const MaxPlus& x) {
    if (x.is_neg_inf()) return "-inf";
    return x.value().str();
}

Scalar parse_scalar(std::string_view token) {
    if (token == "-inf") return Scalar::neg_inf();
    bool ghost_tag = false;
    if (!token.empty() && token.back() == 'g') {
        ghost_tag = true;
        token.remove_suffix(1);
    }
    // Grammar: [-]digits[/digits]
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t p = start;
        while (p < token.size() && std::isdigit(static_cast<unsigned char>(token[p]))) ++p;
        return p;
    };
    if (pos < token.size() && token[pos] == '-') ++pos;
    std::size_t after_num = digits(pos);
    if (after_num == pos) throw ParseError("expected a scalar token, got '" + std::string(token) + "'", 0, 0);
    pos = after_num;
    if (pos < token.size()) {
        if (token[pos] != '/') throw ParseError("bad scalar token '" + std::string(token) + "'", 0, 0);
        ++pos;
        std::size_t after_den = digits(pos);
        if (after_den == pos || after_den != token.size())
            throw ParseError("bad rational token '" + std::string(token) + "'", 0, 0);
        if (std::all_of(token.begin() + pos, token.end(), [](char c) { return c == '0'; }))
            throw ParseError("zero denominator in '" + std::string(token) + "'", 0, 0);
    }
    Rational mag{std::string(token)};
    return ghost_tag ? Scalar::ghost(std::move(mag)) : Scalar::real(std::move(mag));
}

}  // namespace trop
