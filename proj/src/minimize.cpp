#include "bnsynth/minimize.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace bnsynth {

namespace {

constexpr int kExactCoverArity = 10;

// Fixed-width bitmask over the minterm list.
struct Mask {
    std::vector<std::uint64_t> words;

    explicit Mask(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool get(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }

    void operator|=(const Mask& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
    }
    bool covers_all(const Mask& universe) const {
        for (std::size_t w = 0; w < words.size(); ++w)
            if ((words[w] & universe.words[w]) != universe.words[w]) return false;
        return true;
    }
    bool intersects_complement(const Mask& covered, const Mask& universe) const {
        for (std::size_t w = 0; w < words.size(); ++w)
            if (words[w] & ~covered.words[w] & universe.words[w]) return true;
        return false;
    }
    int popcount_andnot(const Mask& covered) const {
        int n = 0;
        for (std::size_t w = 0; w < words.size(); ++w)
            n += std::popcount(words[w] & ~covered.words[w]);
        return n;
    }
    // Lowest bit of universe not covered; universe \ covered must be nonempty.
    static std::size_t lowest_uncovered(const Mask& covered, const Mask& universe) {
        for (std::size_t w = 0; w < universe.words.size(); ++w) {
            std::uint64_t bits = universe.words[w] & ~covered.words[w];
            if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        }
        return 0;
    }
};

// Deterministic branch-and-bound minimum cover over prime implicants.
// Chooses the cover with the fewest cubes, breaking ties by total literal
// count, then by lexicographic cube list.
class CoverSearch {
public:
    CoverSearch(const std::vector<Cube>& primes, const std::vector<std::uint32_t>& minterms,
                int arity)
        : primes_(primes), arity_(arity), universe_(minterms.size()) {
        for (std::size_t m = 0; m < minterms.size(); ++m) universe_.set(m);
        cover_masks_.assign(primes.size(), Mask(minterms.size()));
        for (std::size_t p = 0; p < primes.size(); ++p)
            for (std::size_t m = 0; m < minterms.size(); ++m)
                if (primes[p].covers(minterms[m])) cover_masks_[p].set(m);
    }

    std::vector<Cube> run() {
        std::vector<std::size_t> chosen;
        Mask covered(universe_.words.size() * 64);
        covered.words.resize(universe_.words.size());
        std::vector<bool> essential(primes_.size(), false);
        std::size_t num_minterms = 0;
        for (std::uint64_t w : universe_.words) num_minterms += static_cast<std::size_t>(std::popcount(w));
        for (std::size_t m = 0; m < num_minterms; ++m) {
            int count = 0;
            std::size_t only = 0;
            for (std::size_t p = 0; p < primes_.size(); ++p)
                if (cover_masks_[p].get(m)) {
                    ++count;
                    only = p;
                    if (count > 1) break;
                }
            if (count == 1 && !essential[only]) {
                essential[only] = true;
                chosen.push_back(only);
                covered |= cover_masks_[only];
            }
        }
        std::sort(chosen.begin(), chosen.end());

        std::vector<std::size_t> rest;
        for (std::size_t p = 0; p < primes_.size(); ++p)
            if (!essential[p] && cover_masks_[p].intersects_complement(covered, universe_))
                rest.push_back(p);
        // Wide coverage first keeps the search shallow; order is fixed.
        std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
            int ca = cover_masks_[a].popcount_andnot(covered);
            int cb = cover_masks_[b].popcount_andnot(covered);
            if (ca != cb) return ca > cb;
            return primes_[a] < primes_[b];
        });

        best_extra_.clear();
        best_found_ = false;
        std::vector<std::size_t> picks;
        search(rest, covered, picks);

        std::vector<std::size_t> all = chosen;
        all.insert(all.end(), best_extra_.begin(), best_extra_.end());
        std::vector<Cube> cover;
        cover.reserve(all.size());
        for (std::size_t p : all) cover.push_back(primes_[p]);
        std::sort(cover.begin(), cover.end());
        return cover;
    }

private:
    int literal_count(const std::vector<std::size_t>& picks) const {
        int n = 0;
        for (std::size_t p : picks) n += arity_ - std::popcount(primes_[p].dash);
        return n;
    }

    bool better(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        int la = literal_count(a), lb = literal_count(b);
        if (la != lb) return la < lb;
        std::vector<Cube> ca, cb;
        for (std::size_t p : a) ca.push_back(primes_[p]);
        for (std::size_t p : b) cb.push_back(primes_[p]);
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        return ca < cb;
    }

    void search(const std::vector<std::size_t>& rest, const Mask& covered,
                std::vector<std::size_t>& picks) {
        if (covered.covers_all(universe_)) {
            if (!best_found_ || better(picks, best_extra_)) {
                best_extra_ = picks;
                best_found_ = true;
            }
            return;
        }
        if (best_found_ && picks.size() + 1 > best_extra_.size()) return;
        // Branch on the lowest uncovered minterm: some pick must cover it.
        std::size_t must = Mask::lowest_uncovered(covered, universe_);
        for (std::size_t p : rest) {
            if (!cover_masks_[p].get(must)) continue;
            picks.push_back(p);
            Mask next = covered;
            next |= cover_masks_[p];
            search(rest, next, picks);
            picks.pop_back();
        }
    }

    const std::vector<Cube>& primes_;
    int arity_;
    Mask universe_;
    std::vector<Mask> cover_masks_;
    std::vector<std::size_t> best_extra_;
    bool best_found_ = false;
};

std::vector<Cube> greedy_cover(const std::vector<Cube>& primes,
                               const std::vector<std::uint32_t>& minterms) {
    std::set<std::uint32_t> remaining(minterms.begin(), minterms.end());
    std::vector<Cube> cover;
    std::vector<bool> used(primes.size(), false);
    while (!remaining.empty()) {
        std::size_t best = primes.size();
        std::size_t best_count = 0;
        for (std::size_t p = 0; p < primes.size(); ++p) {
            if (used[p]) continue;
            std::size_t count = 0;
            for (std::uint32_t m : remaining)
                if (primes[p].covers(m)) ++count;
            if (count > best_count) {
                best_count = count;
                best = p;
            }
        }
        if (best == primes.size()) throw Error("cover search: uncoverable minterm");
        used[best] = true;
        cover.push_back(primes[best]);
        for (auto it = remaining.begin(); it != remaining.end();)
            it = primes[best].covers(*it) ? remaining.erase(it) : std::next(it);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

} // namespace

std::vector<Cube> prime_implicants(const TruthTable& table) {
    std::vector<Cube> current;
    for (std::size_t k = 0; k < table.size(); ++k)
        if (table.get(k)) current.push_back(Cube{static_cast<std::uint32_t>(k), 0});

    std::vector<Cube> primes;
    while (!current.empty()) {
        // Group by dash mask and popcount of the fixed part.
        std::map<std::pair<std::uint32_t, int>, std::vector<Cube>> groups;
        for (const Cube& c : current)
            groups[{c.dash, std::popcount(c.value)}].push_back(c);

        std::set<Cube> merged;
        std::set<Cube> next;
        for (const auto& [key, cubes] : groups) {
            auto upper = groups.find({key.first, key.second + 1});
            if (upper == groups.end()) continue;
            for (const Cube& lo : cubes)
                for (const Cube& hi : upper->second) {
                    std::uint32_t diff = lo.value ^ hi.value;
                    if (std::popcount(diff) != 1) continue;
                    merged.insert(lo);
                    merged.insert(hi);
                    next.insert(Cube{lo.value & ~diff, lo.dash | diff});
                }
        }
        for (const Cube& c : current)
            if (!merged.count(c)) primes.push_back(c);
        current.assign(next.begin(), next.end());
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

Formula minimize_dnf(const TruthTable& table, const std::vector<int>& regulators) {
    const int r = table.arity();
    if (static_cast<int>(regulators.size()) != r)
        throw ContractViolation("regulator list does not match table arity");

    std::vector<int> support = regulators;
    std::size_t ones = table.count_ones();
    if (ones == 0) return Formula::constant(false, std::move(support));
    if (ones == table.size()) return Formula::constant(true, std::move(support));

    std::vector<std::uint32_t> minterms;
    minterms.reserve(ones);
    for (std::size_t k = 0; k < table.size(); ++k)
        if (table.get(k)) minterms.push_back(static_cast<std::uint32_t>(k));

    std::vector<Cube> primes = prime_implicants(table);
    std::vector<Cube> cover = r <= kExactCoverArity ? CoverSearch(primes, minterms, r).run()
                                                    : greedy_cover(primes, minterms);

    std::vector<Term> terms;
    terms.reserve(cover.size());
    for (const Cube& c : cover) {
        std::vector<Literal> lits;
        for (int pos = 0; pos < r; ++pos) {
            std::uint32_t bit = std::uint32_t{1} << TruthTable::bit_of_position(r, pos);
            if (c.dash & bit) continue;
            lits.push_back(Literal{regulators[static_cast<std::size_t>(pos)], (c.value & bit) != 0});
        }
        terms.emplace_back(std::move(lits));
    }
    return Formula::dnf(std::move(support), std::move(terms));
}

} // namespace bnsynth
