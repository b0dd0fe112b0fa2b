#include "bouquet/address.hpp"

#include "bouquet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace bouquet {

namespace {

std::int64_t checked_i64(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw numeric_error(std::string(what) + ": coordinate exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

// |slope*n + intercept| as a function of integer n >= from is V-shaped with
// vertex near n* = -intercept/slope; the minimum over [from, inf) is attained
// at from or at the integers bracketing n*.
__int128 linear_min_abs_from(std::int64_t slope, std::int64_t intercept, __int128 from) {
    auto value = [&](__int128 n) { return abs128(static_cast<__int128>(slope) * n + intercept); };
    __int128 best = value(from);
    // floor division for the vertex
    __int128 q = (-static_cast<__int128>(intercept)) / slope;
    for (__int128 n = q - 1; n <= q + 1; ++n) {
        if (n >= from) best = std::min(best, value(n));
    }
    return best;
}

} // namespace

TailRule TailRule::constant(std::int64_t c) {
    TailRule r;
    r.kind = Kind::Constant;
    r.value = c;
    return r;
}

TailRule TailRule::linear(std::int64_t slope, std::int64_t intercept, TailSign sign) {
    if (slope < 1) throw input_error("linear tail requires slope >= 1");
    TailRule r;
    r.kind = Kind::Linear;
    r.slope = slope;
    r.intercept = intercept;
    r.sign = sign;
    return r;
}

std::int64_t TailRule::at(std::size_t n) const {
    if (kind == Kind::Constant) return value;
    __int128 magnitude = static_cast<__int128>(slope) * static_cast<__int128>(n) + intercept;
    int s = 1;
    switch (sign) {
        case TailSign::Plus: s = 1; break;
        case TailSign::Minus: s = -1; break;
        case TailSign::AltPlus: s = (n % 2 == 0) ? 1 : -1; break;
        case TailSign::AltMinus: s = (n % 2 == 0) ? -1 : 1; break;
    }
    return checked_i64(s * magnitude, "tail coordinate");
}

TailRule TailRule::reindexed_once() const {
    TailRule r = *this;
    if (kind == Kind::Linear) {
        r.intercept = checked_i64(static_cast<__int128>(intercept) + slope, "tail reindex");
        if (sign == TailSign::AltPlus) r.sign = TailSign::AltMinus;
        else if (sign == TailSign::AltMinus) r.sign = TailSign::AltPlus;
    }
    return r;
}

std::int64_t ExternalAddress::coordinate(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return tail.at(n);
}

ExternalAddress ExternalAddress::materialized(std::size_t n) const {
    ExternalAddress out = *this;
    for (std::size_t i = out.prefix.size(); i < n; ++i) out.prefix.push_back(tail.at(i));
    return out;
}

EscapeClass in_x(const ExternalAddress& a) {
    if (a.tail.kind == TailRule::Kind::Constant) return EscapeClass::NotEscaping;
    switch (a.tail.sign) {
        case TailSign::Plus: return EscapeClass::ImagPlusEscape;
        case TailSign::Minus: return EscapeClass::ImagMinusEscape;
        default: return EscapeClass::ImagUnsignedEscape;
    }
}

bool is_imag_escaping(EscapeClass c) { return c != EscapeClass::NotEscaping; }

double product_metric(const ExternalAddress& a, const ExternalAddress& b, int horizon) {
    if (horizon < 1) throw input_error("product_metric requires horizon >= 1");
    // Beyond both prefixes each sequence is affine per parity class, so two
    // agreements per parity imply agreement everywhere past the scan window.
    std::size_t base = std::max(a.prefix.size(), b.prefix.size());
    std::size_t limit = std::max<std::size_t>(static_cast<std::size_t>(horizon), base + 4);
    for (std::size_t n = 0; n <= limit; ++n) {
        if (a.coordinate(n) != b.coordinate(n)) return std::ldexp(1.0, -static_cast<int>(n));
    }
    return 0.0;
}

ExternalAddress claim_density_witness(const ExternalAddress& a, std::size_t n) {
    ExternalAddress out;
    out.prefix.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.prefix.push_back(a.coordinate(i));
    out.tail = TailRule::linear(1, 0, TailSign::Plus);
    return out;
}

ExternalAddress claim_cap_witness(const ExternalAddress& a, std::size_t n, std::int64_t dom_alpha) {
    if (dom_alpha < 0) throw input_error("claim_cap_witness requires dom_alpha >= 0");
    ExternalAddress out = a.materialized(n + 1);
    __int128 mag = abs128(out.prefix[n]);
    out.prefix[n] = static_cast<std::int64_t>(std::min<__int128>(mag, dom_alpha));
    return out;
}

std::int64_t min_abs_coordinate_from(const ExternalAddress& a, std::size_t from) {
    __int128 best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t n = from; n < a.prefix.size(); ++n) {
        best = std::min(best, abs128(a.prefix[n]));
    }
    std::size_t t0 = std::max(from, a.prefix.size());
    if (a.tail.kind == TailRule::Kind::Constant) {
        best = std::min(best, abs128(a.tail.value));
    } else {
        best = std::min(best, linear_min_abs_from(a.tail.slope, a.tail.intercept,
                                                  static_cast<__int128>(t0)));
    }
    return checked_i64(best, "min abs coordinate");
}

std::int64_t last_index_below(const ExternalAddress& a, std::int64_t bound) {
    if (bound <= 0) return -1;
    std::int64_t last = -1;
    if (a.tail.kind == TailRule::Kind::Constant) {
        if (abs128(a.tail.value) < bound) {
            throw not_in_x_error("constant tail stays below bound at every index");
        }
    } else {
        // slope*n + intercept is increasing in n, so the tail indices with
        // |value| < bound form one interval; its top is the largest n with
        // value <= bound-1, provided the value there is also > -bound.
        __int128 slope = a.tail.slope, inter = a.tail.intercept, b = bound;
        __int128 num = b - 1 - inter;
        __int128 hi = num >= 0 ? num / slope : -((-num + slope - 1) / slope);
        if (hi >= static_cast<__int128>(a.prefix.size()) && abs128(slope * hi + inter) < b) {
            last = checked_i64(hi, "last index below");
        }
    }
    for (std::size_t n = a.prefix.size(); n-- > 0;) {
        if (abs128(a.prefix[n]) < bound) {
            last = std::max<std::int64_t>(last, static_cast<std::int64_t>(n));
            break;
        }
    }
    return last;
}

std::string tail_sign_token(TailSign s) {
    switch (s) {
        case TailSign::Plus: return "+";
        case TailSign::Minus: return "-";
        case TailSign::AltPlus: return "alt+";
        case TailSign::AltMinus: return "alt-";
    }
    return "+";
}

TailSign tail_sign_from_token(const std::string& token) {
    if (token == "+") return TailSign::Plus;
    if (token == "-") return TailSign::Minus;
    if (token == "alt" || token == "alt+") return TailSign::AltPlus;
    if (token == "alt-") return TailSign::AltMinus;
    throw input_error("unknown tail sign token: " + token);
}

std::string to_shorthand(const ExternalAddress& a) {
    std::ostringstream out;
    for (std::size_t i = 0; i < a.prefix.size(); ++i) {
        if (i) out << ',';
        out << a.prefix[i];
    }
    out << ';';
    if (a.tail.kind == TailRule::Kind::Constant) {
        out << "const:" << a.tail.value;
    } else {
        out << "linear:" << a.tail.slope << ',' << a.tail.intercept << ':'
            << tail_sign_token(a.tail.sign);
    }
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

std::int64_t parse_i64(const std::string& s) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw input_error("trailing characters in integer: " + s);
        return v;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("invalid integer: " + s);
    }
}

} // namespace

ExternalAddress address_from_shorthand(const std::string& text) {
    std::size_t sep = text.find(';');
    if (sep == std::string::npos) {
        throw input_error("address shorthand needs ';' between prefix and tail: " + text);
    }
    ExternalAddress a;
    std::string prefix_part = text.substr(0, sep);
    if (!prefix_part.empty()) {
        for (const auto& tok : split(prefix_part, ',')) a.prefix.push_back(parse_i64(tok));
    }
    std::string tail_part = text.substr(sep + 1);
    if (tail_part.rfind("const:", 0) == 0) {
        a.tail = TailRule::constant(parse_i64(tail_part.substr(6)));
    } else if (tail_part.rfind("linear:", 0) == 0) {
        auto fields = split(tail_part.substr(7), ':');
        if (fields.size() != 2) throw input_error("linear tail shorthand is linear:slope,intercept:sign");
        auto nums = split(fields[0], ',');
        if (nums.size() != 2) throw input_error("linear tail shorthand is linear:slope,intercept:sign");
        a.tail = TailRule::linear(parse_i64(nums[0]), parse_i64(nums[1]),
                                  tail_sign_from_token(fields[1]));
    } else {
        throw input_error("unknown tail kind in shorthand: " + tail_part);
    }
    return a;
}

} // namespace bouquet
