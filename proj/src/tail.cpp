#include "stakeopt/tail.hpp"

#include <cmath>
#include <vector>

#include "stakeopt/errors.hpp"
#include "stakeopt/rng.hpp"

namespace stakeopt {

namespace {

// Stakes and threshold rescaled to integers over a common denominator, so
// every threshold comparison is an integer comparison.
struct ScaledInstance {
    std::vector<BigInt> weights;
    BigInt threshold;
    BigInt denom;
};

ScaledInstance scale_instance(const Stakes& stakes, const Rational& t) {
    BigInt d = t.den();
    for (const Rational& c : stakes) d = boost::multiprecision::lcm(d, c.den());
    ScaledInstance s;
    s.denom = d;
    s.threshold = t.num() * (d / t.den());
    s.weights.reserve(static_cast<std::size_t>(stakes.size()));
    for (const Rational& c : stakes) s.weights.push_back(c.num() * (d / c.den()));
    return s;
}

}  // namespace

std::string_view to_string(TailMethod m) {
    switch (m) {
        case TailMethod::enumeration: return "enumeration";
        case TailMethod::convolution: return "convolution";
        case TailMethod::monte_carlo: return "monte-carlo";
    }
    return "?";
}

TailResult tail_enum(const Stakes& stakes, const Params& params, int cap) {
    const long n = stakes.size();
    if (n > cap)
        throw cap_error("enumeration cap exceeded: " + std::to_string(n) + " stakes > cap " +
                        std::to_string(cap));
    ScaledInstance inst = scale_instance(stakes, params.t);
    const BigInt np = params.p.num();
    const BigInt dp = params.p.den();
    const BigInt nq = dp - np;

    std::vector<BigInt> dp_pow(static_cast<std::size_t>(n) + 1);
    dp_pow[0] = 1;
    for (long i = 1; i <= n; ++i) dp_pow[static_cast<std::size_t>(i)] = dp_pow[static_cast<std::size_t>(i - 1)] * dp;
    std::vector<BigInt> suffix(static_cast<std::size_t>(n) + 1);
    suffix[static_cast<std::size_t>(n)] = 0;
    for (long i = n - 1; i >= 0; --i)
        suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i + 1)] + inst.weights[static_cast<std::size_t>(i)];

    BigInt total = 0;
    // Mass of every completion of a fixed prefix is the prefix mass, so once
    // the running sum reaches t the whole subtree is added at once; once even
    // the full remainder cannot reach t the subtree is dropped.
    auto dfs = [&](auto&& self, long i, const BigInt& mass, const BigInt& sum) -> void {
        if (mass == 0) return;
        if (sum >= inst.threshold) {
            total += mass * dp_pow[static_cast<std::size_t>(n - i)];
            return;
        }
        if (i == n) return;
        if (sum + suffix[static_cast<std::size_t>(i)] < inst.threshold) return;
        self(self, i + 1, mass * np, sum + inst.weights[static_cast<std::size_t>(i)]);
        self(self, i + 1, mass * nq, sum);
    };
    dfs(dfs, 0, BigInt(1), BigInt(0));
    return {Rational(total, dp_pow[static_cast<std::size_t>(n)]), TailMethod::enumeration, std::nullopt};
}

TailResult tail_dp(const Stakes& stakes, const Params& params, std::size_t support_cap) {
    const long n = stakes.size();
    ScaledInstance inst = scale_instance(stakes, params.t);
    const BigInt np = params.p.num();
    const BigInt dp = params.p.den();
    const BigInt nq = dp - np;

    // (value, mass) pairs sorted by value; masses at step i live over dp^i.
    std::vector<std::pair<BigInt, BigInt>> support{{BigInt(0), BigInt(1)}};
    for (long i = 0; i < n; ++i) {
        const BigInt& w = inst.weights[static_cast<std::size_t>(i)];
        std::vector<std::pair<BigInt, BigInt>> next;
        next.reserve(support.size() * 2);
        std::size_t a = 0, b = 0;  // a: excluded branch, b: included branch (shifted by w)
        while (a < support.size() || b < support.size()) {
            BigInt va, vb;
            bool have_a = a < support.size(), have_b = b < support.size();
            if (have_a) va = support[a].first;
            if (have_b) vb = support[b].first + w;
            if (have_a && (!have_b || va < vb)) {
                BigInt m = support[a].second * nq;
                if (m != 0) next.emplace_back(std::move(va), std::move(m));
                ++a;
            } else if (have_b && (!have_a || vb < va)) {
                BigInt m = support[b].second * np;
                if (m != 0) next.emplace_back(std::move(vb), std::move(m));
                ++b;
            } else {
                BigInt m = support[a].second * nq + support[b].second * np;
                if (m != 0) next.emplace_back(std::move(va), std::move(m));
                ++a;
                ++b;
            }
        }
        if (next.size() > support_cap)
            throw cap_error("convolution support cap exceeded: " + std::to_string(next.size()) +
                            " points > cap " + std::to_string(support_cap));
        support = std::move(next);
    }

    BigInt acc = 0;
    for (auto it = support.rbegin(); it != support.rend() && it->first >= inst.threshold; ++it)
        acc += it->second;
    BigInt dp_n = 1;
    for (long i = 0; i < n; ++i) dp_n *= dp;
    return {Rational(acc, dp_n), TailMethod::convolution, std::nullopt};
}

TailResult tail_mc(const Stakes& stakes, const Params& params, std::uint64_t samples,
                   std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("monte carlo needs samples >= 1");
    ScaledInstance inst = scale_instance(stakes, params.t);
    std::mt19937_64 gen(seed);
    const long n = stakes.size();
    std::uint64_t hits = 0;
    BigInt sum;
    for (std::uint64_t s = 0; s < samples; ++s) {
        sum = 0;
        for (long i = 0; i < n; ++i)
            if (bernoulli_exact(gen, params.p)) sum += inst.weights[static_cast<std::size_t>(i)];
        if (sum >= inst.threshold) ++hits;
    }
    Rational estimate{BigInt(hits), BigInt(samples)};
    double q = estimate.to_double();
    double se = std::sqrt(q * (1.0 - q) / static_cast<double>(samples));
    return {estimate, TailMethod::monte_carlo, se};
}

Rational binomial_tail(long trials, const Rational& p, long at_least) {
    if (trials < 0) throw std::invalid_argument("negative trial count");
    if (at_least <= 0) return 1;
    if (at_least > trials) return 0;
    const BigInt np = p.num();
    const BigInt dp = p.den();
    const BigInt nq = dp - np;

    std::vector<BigInt> np_pow(static_cast<std::size_t>(trials) + 1), nq_pow(static_cast<std::size_t>(trials) + 1);
    np_pow[0] = nq_pow[0] = 1;
    for (long i = 1; i <= trials; ++i) {
        np_pow[static_cast<std::size_t>(i)] = np_pow[static_cast<std::size_t>(i - 1)] * np;
        nq_pow[static_cast<std::size_t>(i)] = nq_pow[static_cast<std::size_t>(i - 1)] * nq;
    }
    BigInt binom = 1;  // C(trials, 0)
    BigInt acc = 0;
    for (long j = 1; j <= trials; ++j) {
        binom = binom * (trials - j + 1) / j;
        if (j >= at_least) acc += binom * np_pow[static_cast<std::size_t>(j)] * nq_pow[static_cast<std::size_t>(trials - j)];
    }
    BigInt dp_n = 1;
    for (long i = 0; i < trials; ++i) dp_n *= dp;
    return Rational(acc, dp_n);
}

StrategyValue bold_play(const Params& params) {
    if (params.t.sign() == 0)
        throw regime_error("bold play is undefined at t = 0: the bet count floor(1/t) is unbounded");
    BigInt k_big = (Rational(1) / params.t).floor();
    long k = k_big.convert_to<long>();
    Rational value = Rational(1) - (Rational(1) - params.p).pow(k);
    return {StrategyKind::bold, k, std::nullopt, std::move(value)};
}

StrategyValue average_play(long k, const Params& params) {
    if (k < 1) throw std::invalid_argument("average play needs k >= 1");
    Rational kt = Rational(k) * params.t;
    long m = kt.ceil().convert_to<long>();
    return {StrategyKind::average, k, std::nullopt, binomial_tail(k, params.p, m)};
}

}  // namespace stakeopt
