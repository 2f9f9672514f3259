#include "galdens/rational.hpp"

#include "galdens/error.hpp"

#include <cctype>
#include <string>

namespace galdens {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::InvalidGroup: return "invalid-group";
        case ErrorCode::BoundExceeded: return "bound-exceeded";
        case ErrorCode::GroupMismatch: return "group-mismatch";
        case ErrorCode::NotSurjective: return "not-surjective";
        case ErrorCode::MismatchedTargets: return "mismatched-targets";
        case ErrorCode::NoSuitablePrime: return "no-suitable-prime";
        case ErrorCode::NoAdmissibleShift: return "no-admissible-shift";
        case ErrorCode::TooSmallEpsilon: return "too-small-epsilon";
        case ErrorCode::BadReduction: return "bad-reduction";
        case ErrorCode::NoGoodPrimes: return "no-good-primes";
    }
    return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + std::string(s) + "'");
    BigInt v(std::string(s), 10);
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty rational");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(s.substr(0, slash));
        BigInt den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    // decimal with optional exponent
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        BigInt ex = parse_integer(s.substr(e + 1));
        if (!ex.fits_slong_p() || abs(ex) > 10000)
            throw Error(ErrorCode::InvalidArgument, "exponent out of range in '" + std::string(text) + "'");
        exponent = ex.get_si();
        s = s.substr(0, e);
    }
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto ip = s.substr(0, dot);
        auto fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw Error(ErrorCode::InvalidArgument, "malformed decimal '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) throw Error(ErrorCode::InvalidArgument, "malformed number '" + std::string(text) + "'");
        digits = std::string(s);
    }
    if (digits.empty()) digits = "0";
    Rational r{BigInt(digits, 10)};
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0)
        r /= scale;
    else
        r *= scale;
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace galdens
