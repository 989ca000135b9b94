#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stakeopt/rational.hpp"

namespace stakeopt {

// A stake vector: non-negative weights in canonical form (sorted in
// non-increasing order, trailing zeros stripped) that sum to exactly 1.
// Construction validates the invariants and throws std::invalid_argument on
// violation; use normalized() to rescale a raw vector first.
class Stakes {
public:
    explicit Stakes(std::vector<Rational> coefficients);

    // Comma-separated rational literals, e.g. "1/2,1/4,1/4".
    static Stakes parse(std::string_view csv);
    // k equal stakes of 1/k.
    static Stakes average(long k);
    // Rescales by 1/sum (sum must be positive), then canonicalizes.
    static Stakes normalized(std::vector<Rational> raw);

    long size() const { return static_cast<long>(c_.size()); }
    const Rational& operator[](long i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coefficients() const { return c_; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    bool is_average() const;  // all coefficients equal
    std::string to_string() const;

    friend bool operator==(const Stakes&, const Stakes&) = default;

private:
    std::vector<Rational> c_;
};

// Success probability p and threshold t, both in [0,1].
struct Params {
    Rational p, t;

    Params(Rational p_, Rational t_);

    // Operations that only make sense for p <= t call this and raise
    // regime_error instead of silently proceeding.
    void require_p_at_most_t() const;
};

}  // namespace stakeopt
