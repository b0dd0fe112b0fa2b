#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bouquet {

/// Sign pattern of a linear tail. Alternating tails carry a phase
/// (which parity is positive) so that the shift map stays closed on
/// the address family.
enum class TailSign { Plus, Minus, AltPlus, AltMinus };

/// Rule defining the coordinates s_n for every n past the explicit prefix.
/// Indices are absolute: a linear tail gives s_n = sign(n) * (slope*n + intercept)
/// for all n >= prefix length, regardless of how long the prefix is.
struct TailRule {
    enum class Kind { Constant, Linear };

    Kind kind = Kind::Constant;
    std::int64_t value = 0;     // Constant
    std::int64_t slope = 1;     // Linear, must be >= 1
    std::int64_t intercept = 0; // Linear
    TailSign sign = TailSign::Plus;

    static TailRule constant(std::int64_t c);
    static TailRule linear(std::int64_t slope, std::int64_t intercept, TailSign sign);

    std::int64_t at(std::size_t n) const;

    /// Rule r' with r'(n) == r(n+1): what the tail becomes under one shift.
    TailRule reindexed_once() const;

    bool operator==(const TailRule&) const = default;
};

/// Finitely described integer sequence: explicit prefix followed by a tail rule.
struct ExternalAddress {
    std::vector<std::int64_t> prefix;
    TailRule tail;

    std::int64_t coordinate(std::size_t n) const;

    /// Copy with coordinates [0, n) materialized into the prefix.
    ExternalAddress materialized(std::size_t n) const;

    bool operator==(const ExternalAddress&) const = default;
};

enum class EscapeClass { ImagUnsignedEscape, ImagPlusEscape, ImagMinusEscape, NotEscaping };

/// Exact escape classification from the tail rule alone.
EscapeClass in_x(const ExternalAddress& a);

bool is_imag_escaping(EscapeClass c);

/// 2^-m where m is the first index at which a and b disagree; 0 if the
/// sequences are identical. The decision is exact: beyond both prefixes the
/// coordinates are per-parity affine in n, so a bounded scan settles equality.
double product_metric(const ExternalAddress& a, const ExternalAddress& b, int horizon);

/// Address keeping the first n coordinates of a and continuing with s_k = k.
ExternalAddress claim_density_witness(const ExternalAddress& a, std::size_t n);

/// Address equal to a except coordinate n becomes min(|s_n|, dom_alpha).
ExternalAddress claim_cap_witness(const ExternalAddress& a, std::size_t n, std::int64_t dom_alpha);

/// Exact minimum of |s_n| over n >= from; returns nullopt when the tail is
/// linear and unbounded has no bearing (minimum always exists; nullopt never).
std::int64_t min_abs_coordinate_from(const ExternalAddress& a, std::size_t from);

/// Largest index n with |s_n| < bound, -1 when there is none.
/// Throws not_in_x_error when infinitely many coordinates stay below bound
/// (constant tail with |c| < bound).
std::int64_t last_index_below(const ExternalAddress& a, std::int64_t bound);

// Inline shorthand: "0,2,5;linear:1,0:+" or ";const:0".
std::string to_shorthand(const ExternalAddress& a);
ExternalAddress address_from_shorthand(const std::string& text);

std::string tail_sign_token(TailSign s);
TailSign tail_sign_from_token(const std::string& token);

} // namespace bouquet
