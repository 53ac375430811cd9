#include "ultragraph/rational.hpp"

#include <algorithm>
#include <cctype>

namespace ultragraph {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class to_mpz(std::string_view digits) { return mpz_class(std::string(digits), 10); }

}  // namespace

Rational::Rational(long numerator, unsigned long denominator) : value_(numerator, denominator) {
    value_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return std::nullopt;
    }

    mpq_class value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            return std::nullopt;
        }
        mpz_class d = to_mpz(den);
        if (d == 0) {
            return std::nullopt;
        }
        value = mpq_class(to_mpz(num), d);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            return std::nullopt;
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        const mpz_class w = whole.empty() ? mpz_class(0) : to_mpz(whole);
        value = mpq_class(w * scale + to_mpz(frac), scale);
    } else {
        if (!all_digits(text)) {
            return std::nullopt;
        }
        value = mpq_class(to_mpz(text));
    }
    if (negative) {
        value = -value;
    }
    return Rational(std::move(value));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_str();
}

}  // namespace ultragraph
