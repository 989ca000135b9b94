#include "stakeopt/stakes.hpp"

#include <algorithm>

#include "stakeopt/errors.hpp"

namespace stakeopt {

Stakes::Stakes(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("stake vector must have at least one entry");
    for (const Rational& c : c_) {
        if (c.sign() < 0) throw std::invalid_argument("negative stake " + c.to_string());
        if (c > 1) throw std::invalid_argument("stake above 1: " + c.to_string());
    }
    std::sort(c_.begin(), c_.end(), [](const Rational& a, const Rational& b) { return b < a; });
    while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
    Rational sum = 0;
    for (const Rational& c : c_) sum += c;
    if (sum != 1)
        throw std::invalid_argument("stakes sum to " + sum.to_string() +
                                    ", expected 1 (use --normalize to rescale)");
}

Stakes Stakes::parse(std::string_view csv) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string_view item =
            csv.substr(start, comma == std::string_view::npos ? csv.size() - start : comma - start);
        coeffs.push_back(Rational::parse(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Stakes(std::move(coeffs));
}

Stakes Stakes::average(long k) {
    if (k < 1) throw std::invalid_argument("average needs k >= 1");
    return Stakes(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, k)));
}

Stakes Stakes::normalized(std::vector<Rational> raw) {
    Rational sum = 0;
    for (const Rational& c : raw) sum += c;
    if (sum.sign() <= 0) throw std::invalid_argument("cannot normalize stakes with sum " + sum.to_string());
    for (Rational& c : raw) c /= sum;
    return Stakes(std::move(raw));
}

bool Stakes::is_average() const {
    return std::all_of(c_.begin(), c_.end(), [&](const Rational& c) { return c == c_.front(); });
}

std::string Stakes::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += c_[i].to_string();
    }
    return out;
}

Params::Params(Rational p_, Rational t_) : p(std::move(p_)), t(std::move(t_)) {
    if (p.sign() < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1], got " + p.to_string());
    if (t.sign() < 0 || t > 1) throw std::invalid_argument("t must lie in [0,1], got " + t.to_string());
}

void Params::require_p_at_most_t() const {
    if (p > t)
        throw regime_error("requires p <= t (got p=" + p.to_string() + ", t=" + t.to_string() + ")");
}

}  // namespace stakeopt
