#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ultragraph {

/// Exact arbitrary-precision rational, always kept in lowest terms.
///
/// Labels, weights and distances are all Rationals. Distances are produced
/// only by min/max over labels, so no arithmetic beyond comparison is needed
/// on the hot paths; the GMP backing keeps parsing and rendering exact.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, unsigned long denominator);

    /// Accepts `7`, `1.25`, `.5`, `3/2` with an optional leading `-`.
    /// Returns nullopt on anything else (including a zero denominator).
    static std::optional<Rational> parse(std::string_view text);

    /// `p/q` in lowest terms, or a bare integer when q = 1.
    std::string str() const;

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }

    const mpq_class& value() const { return value_; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_;
};

inline const Rational& max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ultragraph
