#pragma once

#include <iosfwd>

#include "falsetheta/int_series.hpp"
#include "falsetheta/mod_series.hpp"

namespace falsetheta {

/// Series interchange format:
///   #trunc=N
///   exponent<TAB>coefficient
/// one line per nonzero coefficient, decimal, ascending exponents.
void write_series(std::ostream& os, const IntSeries& s);
void write_series(std::ostream& os, const ModSeries& s);

/// Parses the interchange format; rejects missing header, unsorted or
/// negative exponents, and garbage lines.
IntSeries read_series(std::istream& is);

}  // namespace falsetheta
