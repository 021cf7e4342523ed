#ifndef STC_RATIONAL_HPP
#define STC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace stc {

// Exact rational number. All coordinate arithmetic and every causal test in
// this library is carried out over Rat; no floating point is used anywhere a
// verdict depends on it.
using Rat = boost::multiprecision::cpp_rational;

/// Parses "7", "-3", "3/2", "-5/4" or an exact decimal like "0.25".
/// Returns nullopt on malformed text or a zero denominator.
std::optional<Rat> parse_rational(const std::string& text);

/// Canonical text form: lowest terms, positive denominator, "p/q" or "p".
std::string to_string(const Rat& value);

}  // namespace stc

#endif
