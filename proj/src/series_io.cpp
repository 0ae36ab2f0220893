#include "falsetheta/series_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace falsetheta {

void write_series(std::ostream& os, const IntSeries& s) {
    os << "#trunc=" << s.trunc() << "\n";
    for (std::int64_t n = 0; n <= s.trunc(); ++n)
        if (s.coeff(n) != 0) os << n << "\t" << s.coeff(n).get_str() << "\n";
}

void write_series(std::ostream& os, const ModSeries& s) {
    os << "#trunc=" << s.trunc() << "\n";
    for (std::int64_t n = 0; n <= s.trunc(); ++n)
        if (s.coeff(n) != 0) os << n << "\t" << s.coeff(n) << "\n";
}

IntSeries read_series(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("#trunc=", 0) != 0)
        throw std::invalid_argument("read_series: missing '#trunc=N' header");
    std::int64_t trunc = 0;
    try {
        trunc = std::stoll(line.substr(7));
    } catch (const std::exception&) {
        throw std::invalid_argument("read_series: malformed truncation in header: " + line);
    }
    IntSeries s(trunc);
    std::int64_t prev = -1;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::invalid_argument("read_series: line " + std::to_string(lineno) +
                                        ": expected 'exponent<TAB>coefficient'");
        std::int64_t e = 0;
        try {
            e = std::stoll(line.substr(0, tab));
        } catch (const std::exception&) {
            throw std::invalid_argument("read_series: line " + std::to_string(lineno) +
                                        ": bad exponent");
        }
        if (e < 0 || e > trunc)
            throw std::invalid_argument("read_series: line " + std::to_string(lineno) +
                                        ": exponent outside 0..trunc");
        if (e <= prev)
            throw std::invalid_argument("read_series: line " + std::to_string(lineno) +
                                        ": exponents must be strictly ascending");
        mpz_class c;
        if (c.set_str(line.substr(tab + 1), 10) != 0)
            throw std::invalid_argument("read_series: line " + std::to_string(lineno) +
                                        ": bad coefficient");
        s.set(e, std::move(c));
        prev = e;
    }
    return s;
}

}  // namespace falsetheta
