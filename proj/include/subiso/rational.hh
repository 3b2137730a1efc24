#ifndef SUBISO_RATIONAL_HH
#define SUBISO_RATIONAL_HH 1

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace subiso
{
    /// Exact arbitrary-precision rational. Every value in the model and the
    /// solver is one of these; nothing in the library uses floating point.
    using Rational = mpq_class;

    /// Parses "p", "-p" or "p/q" into a canonical rational. Throws
    /// std::invalid_argument on malformed text or a zero denominator.
    auto parse_rational(std::string_view text) -> Rational;

    /// Canonical "p" or "p/q" rendering.
    auto to_string(const Rational & q) -> std::string;
}

#endif
