#include <cctype>
#include <sstream>

#include "falsetheta/theta.hpp"

namespace falsetheta {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(pos, std::string("expected '") + c + "' (" + what + ")");
    }
    std::int64_t integer(bool allow_negative) {
        skip_ws();
        const std::size_t start = pos;
        bool neg = false;
        if (allow_negative && pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(start, "expected an integer");
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (std::int64_t{1} << 40)) throw ParseError(start, "integer too large");
            ++pos;
        }
        return neg ? -v : v;
    }
};

// arg := ['-'] ( '1' | 'q' ['^' uint] )
std::pair<int, std::int64_t> parse_arg(Cursor& c) {
    int sign = 1;
    if (c.accept('-')) sign = -1;
    if (c.accept('1')) return {sign, 0};
    if (c.accept('q')) {
        std::int64_t e = 1;
        if (c.accept('^')) {
            e = c.integer(false);
            if (e < 0) throw ParseError(c.pos, "theta argument exponent must be >= 0");
        }
        return {sign, e};
    }
    throw ParseError(c.pos, "expected 'q', 'q^<exp>' or '1'");
}

}  // namespace

ThetaSpec parse_theta_spec(std::string_view text) {
    Cursor c{text};
    ThetaSpec spec;
    c.skip_ws();
    if (text.compare(c.pos, 3, "psi") == 0) {
        spec.kind = ThetaKind::false_theta;
        c.pos += 3;
    } else if (text.compare(c.pos, 1, "f") == 0) {
        spec.kind = ThetaKind::theta;
        c.pos += 1;
    } else {
        throw ParseError(c.pos, "expected 'psi' or 'f'");
    }
    c.expect('(', "argument list");
    std::tie(spec.sign_a, spec.exp_a) = parse_arg(c);
    c.expect(',', "second argument");
    std::tie(spec.sign_b, spec.exp_b) = parse_arg(c);
    c.expect(')', "end of argument list");
    if (!c.eof()) throw ParseError(c.pos, "trailing input after spec");
    validate(spec);
    return spec;
}

EtaProductSpec parse_eta_product(std::string_view text) {
    Cursor c{text};
    EtaProductSpec spec;
    if (c.accept('1') && c.eof()) return spec;  // the empty product
    c.pos = 0;
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.peek() == 'q') {
            if (!first) throw ParseError(c.pos, "prefactor q^s must come first");
            c.accept('q');
            spec.prefactor_exp = 1;
            if (c.accept('^')) {
                spec.prefactor_exp = c.integer(false);
                if (spec.prefactor_exp < 0)
                    throw ParseError(c.pos, "prefactor exponent must be >= 0");
            }
        } else if (c.peek() == 'f') {
            c.accept('f');
            EtaFactor fac;
            fac.k = c.integer(false);
            if (fac.k < 1) throw ParseError(c.pos, "factor index must be positive");
            fac.e = 1;
            if (c.accept('^')) fac.e = c.integer(true);
            if (fac.e == 0) throw ParseError(c.pos, "factor exponent must be nonzero");
            for (const auto& f : spec.factors)
                if (f.k == fac.k) throw ParseError(c.pos, "duplicate factor f" + std::to_string(fac.k));
            spec.factors.push_back(fac);
        } else {
            throw ParseError(c.pos, "expected 'q^s' prefactor or 'f<k>[^e]' factor");
        }
        first = false;
        if (c.eof()) break;
        c.expect('*', "factor separator");
    }
    return spec;
}

namespace {

void format_arg(std::ostream& os, int sign, std::int64_t exp) {
    if (sign < 0) os << "-";
    if (exp == 0)
        os << "1";
    else if (exp == 1)
        os << "q";
    else
        os << "q^" << exp;
}

}  // namespace

std::string to_string(const ThetaSpec& spec) {
    std::ostringstream os;
    os << (spec.kind == ThetaKind::false_theta ? "psi" : "f") << "(";
    format_arg(os, spec.sign_a, spec.exp_a);
    os << ",";
    format_arg(os, spec.sign_b, spec.exp_b);
    os << ")";
    return os.str();
}

std::string to_string(const EtaProductSpec& spec) {
    std::ostringstream os;
    bool any = false;
    if (spec.prefactor_exp > 0) {
        os << "q^" << spec.prefactor_exp;
        any = true;
    }
    for (const auto& f : spec.factors) {
        if (any) os << " * ";
        os << "f" << f.k;
        if (f.e != 1) os << "^" << f.e;
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

}  // namespace falsetheta
