#include "dedekind/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "dedekind/equiv.hpp"

namespace dedekind {

namespace {

std::vector<std::uint64_t> enumerate_words(int m) {
    if (m == 0) return {0u, 1u};
    const std::vector<std::uint64_t> prev = enumerate_words(m - 1);
    const unsigned half = 1u << (m - 1);
    std::vector<std::uint64_t> out;
    // A function on m variables is (low half f0, high half f1) with
    // f1 <= f0. Iterating f1 then f0 ascending emits ascending words.
    for (std::uint64_t hi : prev) {
        for (std::uint64_t lo : prev) {
            if ((hi & ~lo) == 0) out.push_back((hi << half) | lo);
        }
    }
    return out;
}

/// Memo for interval_size_down subproblems, keyed on canonical truth
/// words per base size. Shared across threads; lookups take the shared
/// lock, inserts the exclusive one.
class IntervalMemo {
public:
    std::optional<BigInt> find(int m, std::uint64_t key) const {
        std::shared_lock lock(mutex_);
        const auto& table = tables_[static_cast<std::size_t>(m)];
        const auto it = table.find(key);
        if (it == table.end()) return std::nullopt;
        return it->second;
    }

    void insert(int m, std::uint64_t key, const BigInt& value) {
        std::unique_lock lock(mutex_);
        tables_[static_cast<std::size_t>(m)].emplace(key, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::array<std::unordered_map<std::uint64_t, BigInt>, 8> tables_;
};

IntervalMemo& interval_memo() {
    static IntervalMemo memo;
    return memo;
}

/// Cached lattice indexes for the enumeration levels the recursion visits.
const LatticeIndex& cached_index(int m) {
    static std::array<std::optional<LatticeIndex>, 7> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(m)];
    if (!slot) slot = enumerate_mbfs(BaseSize(m));
    return *slot;
}

BigInt interval_down_rec(std::uint64_t alpha, int m) {
    if (m == 0) return BigInt((alpha & 1u) ? 2 : 1);
    const std::uint64_t key = detail::canonical_word64(alpha, m);
    if (auto hit = interval_memo().find(m, key)) return *hit;

    const unsigned half = 1u << (m - 1);
    const std::uint64_t low_mask = (half >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << half) - 1);
    const std::uint64_t a0 = key & low_mask;
    const std::uint64_t a1 = key >> half;

    BigInt total = 0;
    for (std::uint64_t chi0 : cached_index(m - 1).words()) {
        if ((chi0 & ~a0) != 0) continue;
        total += interval_down_rec(chi0 & a1, m - 1);
    }
    interval_memo().insert(m, key, total);
    return total;
}

} // namespace

LatticeIndex LatticeIndex::build(BaseSize m) {
    if (m.value() > 6) {
        throw capability_error(
            "enumerate_mbfs supports m <= 6; enumerating D_7 is beyond this "
            "build's scale");
    }
    return LatticeIndex(m, enumerate_words(m.value()));
}

std::optional<std::size_t> LatticeIndex::index_of_word(std::uint64_t w) const {
    const auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - words_.begin());
}

std::optional<std::size_t> LatticeIndex::index_of(const Mbf& f) const {
    if (f.base_size() != m_) return std::nullopt;
    return index_of_word(static_cast<std::uint64_t>(f.truth()));
}

LatticeIndex enumerate_mbfs(BaseSize m) { return LatticeIndex::build(m); }

BigInt interval_size_down(const Mbf& alpha) {
    const int m = alpha.base_size().value();
    if (m <= 6) {
        return interval_down_rec(static_cast<std::uint64_t>(alpha.truth()), m);
    }
    // m = 7: one split brings the subproblems into 64-bit range.
    const unsigned half = 1u << (m - 1);
    const std::uint64_t a0 = static_cast<std::uint64_t>(alpha.truth());
    const std::uint64_t a1 = static_cast<std::uint64_t>(alpha.truth() >> half);
    BigInt total = 0;
    for (std::uint64_t chi0 : cached_index(m - 1).words()) {
        if ((chi0 & ~a0) != 0) continue;
        total += interval_down_rec(chi0 & a1, m - 1);
    }
    return total;
}

BigInt interval_size_up(const Mbf& beta) { return interval_size_down(dual(beta)); }

BigInt count_leq_pairs(BaseSize m) {
    if (m.value() <= 5) {
        const LatticeIndex index = enumerate_mbfs(m);
        const auto words = index.words();
        std::uint64_t pairs = 0;
        for (std::uint64_t g : words) {
            for (std::uint64_t f : words) {
                if ((f & ~g) == 0) ++pairs;
            }
        }
        return BigInt(pairs);
    }
    if (m.value() == 6) {
        // Sum of |[bot, gamma]| over D_6, grouped by orbit since the
        // interval size is constant on orbits.
        BigInt total = 0;
        for (const ClassInfo& cls : enumerate_classes(m)) {
            total += BigInt(cls.orbit_size) * interval_size_down(cls.rep);
        }
        return total;
    }
    throw capability_error("count_leq_pairs supports m <= 6");
}

} // namespace dedekind
