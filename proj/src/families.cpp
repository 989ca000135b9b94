#include "stakeopt/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_map>

#include "stakeopt/errors.hpp"
#include "stakeopt/simplex.hpp"

namespace stakeopt {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

void check_ground(int n, int cap, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": ground size must be >= 1");
    if (n > cap)
        throw cap_error(std::string(what) + ": ground size " + std::to_string(n) + " > cap " +
                        std::to_string(cap));
}

}  // namespace

SubsetFamily SubsetFamily::from_masks(int n, std::vector<std::uint32_t> masks) {
    check_ground(n, kGroundCap, "subset family");
    std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    for (std::uint32_t m : masks)
        if ((m & ~full) != 0) throw std::invalid_argument("member outside ground set");
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return SubsetFamily{n, std::move(masks)};
}

SubsetFamily SubsetFamily::from_index_sets(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<std::uint32_t> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) {
        std::uint32_t m = 0;
        for (int e : s) {
            if (e < 1 || e > n) throw std::invalid_argument("element outside {1..n}");
            m |= 1u << (e - 1);
        }
        masks.push_back(m);
    }
    return from_masks(n, std::move(masks));
}

bool SubsetFamily::contains(std::uint32_t mask) const {
    return std::binary_search(members.begin(), members.end(), mask);
}

std::vector<std::vector<int>> SubsetFamily::to_index_sets() const {
    std::vector<std::vector<int>> out;
    out.reserve(members.size());
    for (std::uint32_t m : members) {
        std::vector<int> s;
        for (int e = 1; e <= ground_size; ++e)
            if (m & (1u << (e - 1))) s.push_back(e);
        out.push_back(std::move(s));
    }
    return out;
}

bool SubsetFamily::is_up_set() const {
    for (std::uint32_t m : members)
        for (int b = 0; b < ground_size; ++b)
            if (!(m & (1u << b)) && !contains(m | (1u << b))) return false;
    return true;
}

std::vector<std::uint32_t> SubsetFamily::minimal_members() const {
    std::vector<std::uint32_t> out;
    if (is_up_set()) {
        // In an up-set it suffices to look one element down.
        for (std::uint32_t m : members) {
            bool minimal = true;
            for (int b = 0; b < ground_size && minimal; ++b)
                if ((m & (1u << b)) && contains(m & ~(1u << b))) minimal = false;
            if (minimal) out.push_back(m);
        }
        return out;
    }
    for (std::uint32_t m : members) {
        bool minimal = true;
        for (std::uint32_t o : members)
            if (o != m && (o & ~m) == 0) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(m);
    }
    return out;
}

std::vector<std::uint32_t> SubsetFamily::maximal_non_members() const {
    std::uint32_t full = ground_size == 32 ? ~0u : ((1u << ground_size) - 1);
    std::vector<bool> member(std::size_t{1} << ground_size, false);
    for (std::uint32_t m : members) member[m] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (member[m]) continue;
        bool maximal = true;
        for (int b = 0; b < ground_size && maximal; ++b)
            if (!(m & (1u << b)) && !member[m | (1u << b)]) maximal = false;
        if (maximal) out.push_back(m);
        if (m == full) break;
    }
    return out;
}

SubsetFamily star_family(int n, int element) {
    check_ground(n, kGroundCap, "star family");
    if (element < 1 || element > n) throw std::invalid_argument("star element outside ground set");
    std::uint32_t bit = 1u << (element - 1);
    std::vector<std::uint32_t> masks;
    masks.reserve(std::size_t{1} << (n - 1));
    std::uint32_t full = (n == 32 ? ~0u : ((1u << n) - 1));
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (m & bit) masks.push_back(m);
        if (m == full) break;
    }
    return SubsetFamily::from_masks(n, std::move(masks));
}

SubsetFamily majority_family(int n) {
    check_ground(n, kGroundCap, "majority family");
    std::vector<std::uint32_t> masks;
    std::uint32_t full = (n == 32 ? ~0u : ((1u << n) - 1));
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (2 * popcount(m) > n) masks.push_back(m);
        if (m == full) break;
    }
    return SubsetFamily::from_masks(n, std::move(masks));
}

SubsetFamily threshold_family(const Stakes& stakes, const Rational& t, int ground_size) {
    int g = ground_size == 0 ? static_cast<int>(stakes.size()) : ground_size;
    if (g < stakes.size()) throw std::invalid_argument("ground size smaller than stake count");
    check_ground(g, kGroundCap, "threshold family");

    BigInt d = t.den();
    for (const Rational& c : stakes) d = boost::multiprecision::lcm(d, c.den());
    std::vector<BigInt> w(static_cast<std::size_t>(g), BigInt(0));
    for (long i = 0; i < stakes.size(); ++i)
        w[static_cast<std::size_t>(i)] = stakes[i].num() * (d / stakes[i].den());
    BigInt threshold = t.num() * (d / t.den());

    std::vector<BigInt> suffix(static_cast<std::size_t>(g) + 1);
    suffix[static_cast<std::size_t>(g)] = 0;
    for (int i = g - 1; i >= 0; --i)
        suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i + 1)] + w[static_cast<std::size_t>(i)];

    std::vector<std::uint32_t> members;
    auto dfs = [&](auto&& self, int i, std::uint32_t mask, const BigInt& sum, bool qualified) -> void {
        if (!qualified && sum + suffix[static_cast<std::size_t>(i)] < threshold) return;
        if (i == g) {
            if (qualified) members.push_back(mask);
            return;
        }
        bool q1 = qualified || sum + w[static_cast<std::size_t>(i)] >= threshold;
        self(self, i + 1, mask | (1u << i), sum + w[static_cast<std::size_t>(i)], q1);
        self(self, i + 1, mask, sum, qualified);
    };
    dfs(dfs, 0, 0u, BigInt(0), threshold <= 0);
    return SubsetFamily::from_masks(g, std::move(members));
}

Rational family_weight(const SubsetFamily& family, const Rational& p) {
    const int n = family.ground_size;
    std::vector<BigInt> count(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (std::uint32_t m : family.members) ++count[static_cast<std::size_t>(popcount(m))];
    const BigInt np = p.num(), dp = p.den(), nq = dp - np;
    std::vector<BigInt> np_pow(static_cast<std::size_t>(n) + 1), nq_pow(static_cast<std::size_t>(n) + 1);
    np_pow[0] = nq_pow[0] = 1;
    for (int i = 1; i <= n; ++i) {
        np_pow[static_cast<std::size_t>(i)] = np_pow[static_cast<std::size_t>(i - 1)] * np;
        nq_pow[static_cast<std::size_t>(i)] = nq_pow[static_cast<std::size_t>(i - 1)] * nq;
    }
    BigInt acc = 0;
    for (int j = 0; j <= n; ++j) {
        if (count[static_cast<std::size_t>(j)] != 0)
            acc += count[static_cast<std::size_t>(j)] * np_pow[static_cast<std::size_t>(j)] * nq_pow[static_cast<std::size_t>(n - j)];
    }
    BigInt dp_n = 1;
    for (int i = 0; i < n; ++i) dp_n *= dp;
    return Rational(acc, dp_n);
}

bool is_intersecting(const SubsetFamily& family) {
    std::vector<std::uint32_t> mins = family.minimal_members();
    for (std::uint32_t a : mins) {
        if (a == 0) return false;  // the empty set is disjoint from everything
        for (std::uint32_t b : mins)
            if ((a & b) == 0) return false;
    }
    return true;
}

int matching_number(const SubsetFamily& family) {
    // The empty set packs with anything, so it contributes 1 and is set
    // aside; packing the rest only needs minimal members among the
    // non-empty ones (any matching shrinks member-wise onto them).
    int bonus = family.contains(0) ? 1 : 0;
    std::vector<std::uint32_t> nonempty = family.members;
    nonempty.erase(std::remove(nonempty.begin(), nonempty.end(), 0u), nonempty.end());
    if (nonempty.empty()) return bonus;
    std::vector<std::uint32_t> mins =
        SubsetFamily{family.ground_size, std::move(nonempty)}.minimal_members();

    std::vector<std::vector<std::uint32_t>> by_element(static_cast<std::size_t>(family.ground_size));
    for (std::uint32_t m : mins)
        for (int b = 0; b < family.ground_size; ++b)
            if (m & (1u << b)) by_element[static_cast<std::size_t>(b)].push_back(m);

    std::unordered_map<std::uint32_t, int> memo;
    auto pack = [&](auto&& self, std::uint32_t avail) -> int {
        if (avail == 0) return 0;
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second;
        int low = std::countr_zero(avail);
        int best = self(self, avail & ~(1u << low));  // element `low` stays uncovered
        for (std::uint32_t m : by_element[static_cast<std::size_t>(low)])
            if ((m & ~avail) == 0) best = std::max(best, 1 + self(self, avail & ~m));
        memo.emplace(avail, best);
        return best;
    };
    std::uint32_t full = family.ground_size == 32 ? ~0u : ((1u << family.ground_size) - 1);
    return bonus + pack(pack, full);
}

Rational max_intersecting_weight(int n, const Rational& p) {
    check_ground(n, 12, "intersecting-family search");
    const BigInt np = p.num(), dp = p.den(), nq = dp - np;
    std::vector<BigInt> weight(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        BigInt w = 1;
        for (int i = 0; i < j; ++i) w *= np;
        for (int i = j; i < n; ++i) w *= nq;
        weight[static_cast<std::size_t>(j)] = w;
    }

    // One representative per complementary pair: the one avoiding element n.
    std::uint32_t top = 1u << (n - 1);
    std::uint32_t full = (n == 32 ? ~0u : ((1u << n) - 1));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (!(m & top)) pairs.emplace_back(m, full ^ m);
        if (m == full) break;
    }
    // Optimistic remaining weight, for pruning.
    std::vector<BigInt> rest(pairs.size() + 1);
    rest[pairs.size()] = 0;
    for (std::size_t i = pairs.size(); i-- > 0;) {
        const BigInt& wa = weight[static_cast<std::size_t>(popcount(pairs[i].first))];
        const BigInt& wb = weight[static_cast<std::size_t>(popcount(pairs[i].second))];
        rest[i] = rest[i + 1] + (wa > wb ? wa : wb);
    }

    BigInt best = 0;
    std::vector<std::uint32_t> chosen;
    chosen.reserve(pairs.size());
    auto dfs = [&](auto&& self, std::size_t i, const BigInt& acc) -> void {
        if (acc + rest[i] <= best) return;
        if (i == pairs.size()) {
            best = acc;
            return;
        }
        for (std::uint32_t cand : {pairs[i].first, pairs[i].second}) {
            if (cand == 0) continue;
            bool ok = true;
            for (std::uint32_t c : chosen)
                if ((c & cand) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(cand);
            self(self, i + 1, acc + weight[static_cast<std::size_t>(popcount(cand))]);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, BigInt(0));

    BigInt dp_n = 1;
    for (int i = 0; i < n; ++i) dp_n *= dp;
    return Rational(best, dp_n);
}

FishburnResult fishburn_max(int n, const Rational& p) {
    check_ground(n, kGroundCap, "fishburn maximizer");
    if (p.sign() < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
    Rational half(1, 2);
    if (p > half && n % 2 == 0)
        throw regime_error("maximizer is only characterized for p > 1/2 with odd n");
    if (p < half || (p == half && n % 2 == 0)) {
        SubsetFamily star = star_family(n);
        Rational w = family_weight(star, p);
        return {std::move(star), std::move(w), std::nullopt};
    }
    if (p > half) {
        SubsetFamily maj = majority_family(n);
        Rational w = family_weight(maj, p);
        return {std::move(maj), std::move(w), std::nullopt};
    }
    // p = 1/2 with odd n: both candidates attain the maximum.
    SubsetFamily star = star_family(n);
    SubsetFamily maj = majority_family(n);
    Rational w = family_weight(star, p);
    std::optional<SubsetFamily> tied;
    if (!(maj == star)) tied = std::move(maj);
    return {std::move(star), std::move(w), std::move(tied)};
}

RealizabilityWitness realizable(const SubsetFamily& family, const Rational& t, int ground_cap) {
    const int n = family.ground_size;
    check_ground(n, ground_cap, "realizability");
    if (!family.is_up_set()) throw std::invalid_argument("realizability needs an up-set");

    // Variables: c_1..c_n, then the margin d. Maximize d subject to
    //   sum c = 1, c sorted non-increasing,
    //   member sums >= t (minimal members suffice),
    //   non-member sums <= t - d (maximal non-members suffice), d <= 1.
    const std::size_t nv = static_cast<std::size_t>(n) + 1;
    std::vector<Rational> objective(nv, Rational(0));
    objective[nv - 1] = 1;
    std::vector<LpConstraint> rows;

    LpConstraint sum_row{std::vector<Rational>(nv, Rational(0)), Sense::eq, Rational(1)};
    for (int i = 0; i < n; ++i) sum_row.coeffs[static_cast<std::size_t>(i)] = 1;
    rows.push_back(std::move(sum_row));

    for (int i = 0; i + 1 < n; ++i) {
        LpConstraint chain{std::vector<Rational>(nv, Rational(0)), Sense::ge, Rational(0)};
        chain.coeffs[static_cast<std::size_t>(i)] = 1;
        chain.coeffs[static_cast<std::size_t>(i + 1)] = -1;
        rows.push_back(std::move(chain));
    }

    for (std::uint32_t v : family.minimal_members()) {
        LpConstraint row{std::vector<Rational>(nv, Rational(0)), Sense::ge, t};
        for (int b = 0; b < n; ++b)
            if (v & (1u << b)) row.coeffs[static_cast<std::size_t>(b)] = 1;
        rows.push_back(std::move(row));
    }
    for (std::uint32_t v : family.maximal_non_members()) {
        LpConstraint row{std::vector<Rational>(nv, Rational(0)), Sense::le, t};
        for (int b = 0; b < n; ++b)
            if (v & (1u << b)) row.coeffs[static_cast<std::size_t>(b)] = 1;
        row.coeffs[nv - 1] = 1;
        rows.push_back(std::move(row));
    }
    {
        LpConstraint cap_row{std::vector<Rational>(nv, Rational(0)), Sense::le, Rational(1)};
        cap_row.coeffs[nv - 1] = 1;
        rows.push_back(std::move(cap_row));
    }

    LpResult lp = maximize(objective, rows);
    if (lp.status != LpStatus::optimal || lp.objective.sign() <= 0)
        return {std::nullopt, Rational(0)};
    std::vector<Rational> coeffs(lp.x.begin(), lp.x.begin() + n);
    return {Stakes(std::move(coeffs)), lp.objective};
}

namespace {

// W dominates V when every prefix {1..j} holds at least as many elements of
// W as of V; then W's stake sum is at least V's for every sorted stake
// vector, so a threshold family containing V must contain W.
bool dominates(std::uint32_t w, std::uint32_t v, int n) {
    int cw = 0, cv = 0;
    for (int j = 0; j < n; ++j) {
        cw += (w >> j) & 1u;
        cv += (v >> j) & 1u;
        if (cw < cv) return false;
    }
    return true;
}

std::uint32_t apply_permutation(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::size_t b = 0; b < perm.size(); ++b)
        if (mask & (1u << b)) out |= 1u << perm[b];
    return out;
}

std::vector<std::uint32_t> canonical_orbit_form(const SubsetFamily& f) {
    std::vector<int> perm(static_cast<std::size_t>(f.ground_size));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    do {
        std::vector<std::uint32_t> image;
        image.reserve(f.members.size());
        for (std::uint32_t m : f.members) image.push_back(apply_permutation(m, perm));
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = std::move(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<std::pair<SubsetFamily, RealizabilityWitness>> enumerate_threshold_families(
    int n, const Rational& t, const EnumerateOptions& options) {
    check_ground(n, kGroundCap, "threshold-family enumeration");
    if (n > options.cap && !options.allow_large)
        throw cap_error("threshold-family enumeration capped at n = " + std::to_string(options.cap) +
                        " (pass allow_large / --force to go further)");

    const std::uint32_t full = (1u << n) - 1;
    const std::size_t count = std::size_t{1} << n;

    // Masks in decreasing order of the dyadic key that linearizes domination.
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0u);
    auto key = [&](std::uint32_t m) {
        std::uint32_t k = 0;
        for (int b = 0; b < n; ++b)
            if (m & (1u << b)) k |= 1u << (n - 1 - b);
        return k;
    };
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return key(a) > key(b); });

    std::vector<std::vector<std::size_t>> dominator_pos(count);
    std::vector<std::size_t> pos_of(count);
    for (std::size_t i = 0; i < count; ++i) pos_of[order[i]] = i;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t v = order[i];
        for (std::uint32_t w = 0; w <= full; ++w) {
            if (w != v && dominates(w, v, n)) dominator_pos[i].push_back(pos_of[w]);
            if (w == full) break;
        }
    }

    std::vector<std::pair<SubsetFamily, RealizabilityWitness>> out;
    std::vector<char> chosen(count, 0);
    std::vector<std::uint32_t> picked;

    auto emit = [&]() {
        // The empty set has the minimal key, so if picked it sits last.
        if (t.sign() > 0 && !picked.empty() && picked.back() == 0) return;
        SubsetFamily fam = SubsetFamily::from_masks(n, picked);
        RealizabilityWitness w = realizable(fam, t, n);
        if (w.stakes) out.emplace_back(std::move(fam), std::move(w));
    };
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == count) {
            emit();
            return;
        }
        bool can_take = true;
        for (std::size_t d : dominator_pos[i])
            if (!chosen[d]) {
                can_take = false;
                break;
            }
        if (can_take) {
            chosen[i] = 1;
            picked.push_back(order[i]);
            self(self, i + 1);
            picked.pop_back();
            chosen[i] = 0;
        }
        self(self, i + 1);
    };
    // `picked` is unsorted during the walk; from_masks sorts on emit.
    dfs(dfs, 0);

    if (options.canonical_only) {
        std::set<std::vector<std::uint32_t>> seen;
        std::vector<std::pair<SubsetFamily, RealizabilityWitness>> dedup;
        for (auto& fw : out)
            if (seen.insert(canonical_orbit_form(fw.first)).second) dedup.push_back(std::move(fw));
        out = std::move(dedup);
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.members.size() != b.first.members.size())
            return a.first.members.size() < b.first.members.size();
        return a.first.members < b.first.members;
    });
    return out;
}

std::uint32_t interval_mask(int n, int start, int length) {
    if (n < 2 || n > 31) throw std::invalid_argument("interval modulus out of range");
    if (length < 1 || length >= n) throw std::invalid_argument("interval length must satisfy 0 < a < n");
    std::uint32_t m = 0;
    for (int i = 0; i < length; ++i) m |= 1u << (((start % n + n) + i) % n);
    return m;
}

bool verify_interval_union(const IntervalFamily& family) {
    const int n = family.modulus;
    if (family.intervals.empty()) throw std::invalid_argument("empty interval family");
    int a = family.intervals.front().second;
    std::set<int> starts;
    std::uint32_t uni = 0;
    for (auto [b, len] : family.intervals) {
        if (len != a) throw std::invalid_argument("intervals must share one length");
        starts.insert(((b % n) + n) % n);
        uni |= interval_mask(n, b, len);
    }
    std::uint32_t full = (1u << n) - 1;
    if (uni == full) throw regime_error("interval union covers all of Z/nZ");
    int k = static_cast<int>(starts.size());
    return popcount(uni) >= k + a - 1;
}

bool verify_cross_intersecting(int n, int k, int a, const std::vector<int>& g_starts,
                               const std::vector<int>& f_starts) {
    if (a < 1 || a > n - k) throw std::invalid_argument("needs 1 <= a <= n - k");
    std::set<int> fs;
    for (int b : f_starts) fs.insert(((b % n) + n) % n);
    if (static_cast<int>(fs.size()) != k)
        throw std::invalid_argument("F must consist of k distinct intervals");
    std::set<int> gs;
    for (int c : g_starts) gs.insert(((c % n) + n) % n);
    for (int b : fs)
        for (int c : gs)
            if ((interval_mask(n, b, k) & interval_mask(n, c, a)) == 0)
                throw std::invalid_argument("families are not cross-intersecting");
    return static_cast<int>(gs.size()) <= a;
}

bool verify_cross_intersecting(int n, int k, int a, const std::vector<int>& g_starts) {
    if (a < 1 || a > n - k) throw std::invalid_argument("needs 1 <= a <= n - k");
    std::set<int> gs;
    for (int c : g_starts) gs.insert(((c % n) + n) % n);
    if (static_cast<int>(gs.size()) <= a) return true;
    // The bound can only fail if some k-subset of starts cross-intersects G.
    std::vector<int> pick;
    auto choose = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(pick.size()) == k) {
            for (int b : pick)
                for (int c : gs)
                    if ((interval_mask(n, b, k) & interval_mask(n, c, a)) == 0) return false;
            return true;  // cross-intersecting F found while |G| > a
        }
        for (int b = from; b < n; ++b) {
            pick.push_back(b);
            if (self(self, b + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return !choose(choose, 0);
}

bool verify_measure_intersection(const std::vector<Rational>& element_measures,
                                 const std::vector<std::uint32_t>& subsets, const Rational& t) {
    if (element_measures.empty() || element_measures.size() > 31)
        throw std::invalid_argument("ground set must have 1..31 elements");
    if (subsets.empty()) throw std::invalid_argument("needs at least one subset");
    auto measure = [&](std::uint32_t mask) {
        Rational m = 0;
        for (std::size_t b = 0; b < element_measures.size(); ++b)
            if (mask & (1u << b)) m += element_measures[b];
        return m;
    };
    std::uint32_t full = (1u << element_measures.size()) - 1;
    Rational b = measure(full);
    std::uint32_t inter = full;
    for (std::uint32_t v : subsets) {
        if ((v & ~full) != 0) throw std::invalid_argument("subset outside ground set");
        if (measure(v) < t) throw std::invalid_argument("subset measure below threshold t");
        inter &= v;
    }
    Rational k(static_cast<long long>(subsets.size()));
    return measure(inter) >= k * t - (k - Rational(1)) * b;
}

long scan_interval_union(int n_max, int max_intervals) {
    long violations = 0;
    for (int n = 2; n <= n_max; ++n) {
        std::uint32_t full = (1u << n) - 1;
        for (int a = 1; a < n; ++a) {
            std::vector<int> pick;
            auto rec = [&](auto&& self, int from) -> void {
                if (!pick.empty()) {
                    std::uint32_t uni = 0;
                    for (int b : pick) uni |= interval_mask(n, b, a);
                    if (uni != full) {
                        IntervalFamily fam{n, {}};
                        for (int b : pick) fam.intervals.emplace_back(b, a);
                        if (!verify_interval_union(fam)) ++violations;
                    }
                }
                if (static_cast<int>(pick.size()) == max_intervals) return;
                for (int b = from; b < n; ++b) {
                    pick.push_back(b);
                    self(self, b + 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0);
        }
    }
    return violations;
}

long scan_cross_intersecting(int n_max) {
    long violations = 0;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) {
            for (int a = 1; a <= n - k; ++a) {
                // Starts whose length-a interval meets every interval of F;
                // any cross-intersecting G is a subset of them, so the bound
                // holds for every G iff it holds for this largest one.
                std::vector<int> pick;
                auto rec = [&](auto&& self, int from) -> void {
                    if (static_cast<int>(pick.size()) == k) {
                        int allowed = 0;
                        for (int c = 0; c < n; ++c) {
                            bool meets_all = true;
                            for (int b : pick)
                                if ((interval_mask(n, c, a) & interval_mask(n, b, k)) == 0) {
                                    meets_all = false;
                                    break;
                                }
                            if (meets_all) ++allowed;
                        }
                        if (allowed > a) ++violations;
                        return;
                    }
                    for (int b = from; b < n; ++b) {
                        pick.push_back(b);
                        self(self, b + 1);
                        pick.pop_back();
                    }
                };
                rec(rec, 0);
            }
        }
    }
    return violations;
}

}  // namespace stakeopt
