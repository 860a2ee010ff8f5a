#include "dedekind/equiv.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dedekind/lattice.hpp"
#include "dedekind/tables.hpp"

namespace dedekind {

namespace {

/// Swapping base elements a < b permutes the truth indices by exchanging
/// index bits a and b, which is a single masked shift-swap on the word:
/// every index with bit a set and bit b clear trades places with its
/// partner `delta = 2^b - 2^a` positions up.
struct SwapStep {
    TruthWord mask;
    unsigned shift;
};

template <class Word>
Word delta_swap(Word x, Word mask, unsigned shift) {
    const Word t = ((x >> shift) ^ x) & mask;
    return x ^ t ^ (t << shift);
}

SwapStep make_swap_step(int a, int b, int m) {
    if (a > b) std::swap(a, b);
    TruthWord mask = 0;
    const unsigned n = 1u << m;
    for (unsigned s = 0; s < n; ++s) {
        if (((s >> a) & 1u) && !((s >> b) & 1u)) mask |= TruthWord{1} << s;
    }
    return SwapStep{mask, (1u << b) - (1u << a)};
}

/// Heap's algorithm emits every arrangement of {0..m-1} exactly once,
/// each reached from the previous by one transposition. Recording the
/// swapped values gives a fixed schedule of m!-1 element transpositions
/// whose running composition visits every permutation image of a truth
/// word.
void heap_schedule(int k, std::array<int, 7>& arr,
                   std::vector<std::pair<int, int>>& out) {
    if (k <= 1) return;
    for (int i = 0; i < k - 1; ++i) {
        heap_schedule(k - 1, arr, out);
        const int j = (k % 2 == 0) ? i : 0;
        out.emplace_back(arr[static_cast<std::size_t>(j)], arr[static_cast<std::size_t>(k - 1)]);
        std::swap(arr[static_cast<std::size_t>(j)], arr[static_cast<std::size_t>(k - 1)]);
    }
    heap_schedule(k - 1, arr, out);
}

const std::vector<SwapStep>& swap_schedule(int m) {
    static const std::array<std::vector<SwapStep>, 8> schedules = [] {
        std::array<std::vector<SwapStep>, 8> all;
        for (int m = 0; m <= 7; ++m) {
            std::array<int, 7> arr{};
            for (int i = 0; i < m; ++i) arr[static_cast<std::size_t>(i)] = i;
            std::vector<std::pair<int, int>> pairs;
            heap_schedule(m, arr, pairs);
            for (auto [a, b] : pairs) all[static_cast<std::size_t>(m)].push_back(make_swap_step(a, b, m));
        }
        return all;
    }();
    return schedules[static_cast<std::size_t>(m)];
}

TruthWord canonical_word(TruthWord truth, int m) {
    TruthWord best = truth;
    TruthWord w = truth;
    for (const SwapStep& step : swap_schedule(m)) {
        w = delta_swap(w, step.mask, step.shift);
        if (w < best) best = w;
    }
    return best;
}

unsigned factorial(int m) {
    unsigned f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<unsigned>(i);
    return f;
}

} // namespace

namespace detail {

std::uint64_t canonical_word64(std::uint64_t truth, int m) {
    std::uint64_t best = truth;
    std::uint64_t w = truth;
    for (const SwapStep& step : swap_schedule(m)) {
        w = delta_swap(w, static_cast<std::uint64_t>(step.mask), step.shift);
        if (w < best) best = w;
    }
    return best;
}

void permuted_images64(std::uint64_t truth, int m, std::vector<std::uint64_t>& out) {
    std::uint64_t w = truth;
    out.push_back(w);
    for (const SwapStep& step : swap_schedule(m)) {
        w = delta_swap(w, static_cast<std::uint64_t>(step.mask), step.shift);
        out.push_back(w);
    }
}

std::vector<std::uint64_t> orbit_words64(std::uint64_t truth, int m) {
    std::vector<std::uint64_t> images;
    images.reserve(factorial(m));
    permuted_images64(truth, m, images);
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

} // namespace detail

Mbf canonicalize(const Mbf& f) {
    return Mbf::from_truth_unchecked(f.base_size(),
                                     canonical_word(f.truth(), f.base_size().value()));
}

std::uint32_t orbit_size(const Mbf& f) {
    const int m = f.base_size().value();
    std::vector<TruthWord> images;
    images.reserve(factorial(m));
    TruthWord w = f.truth();
    images.push_back(w);
    for (const SwapStep& step : swap_schedule(m)) {
        w = delta_swap(w, step.mask, step.shift);
        images.push_back(w);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return static_cast<std::uint32_t>(images.size());
}

std::vector<Mbf> distinct_equivalents(const Mbf& f) {
    const int m = f.base_size().value();
    std::vector<Mbf> out;
    if (m <= 6) {
        for (std::uint64_t w :
             detail::orbit_words64(static_cast<std::uint64_t>(f.truth()), m)) {
            out.push_back(Mbf::from_truth_unchecked(f.base_size(), w));
        }
        return out;
    }
    std::vector<TruthWord> images;
    images.reserve(factorial(m));
    TruthWord w = f.truth();
    images.push_back(w);
    for (const SwapStep& step : swap_schedule(m)) {
        w = delta_swap(w, step.mask, step.shift);
        images.push_back(w);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    out.reserve(images.size());
    for (TruthWord img : images) out.push_back(Mbf::from_truth_unchecked(f.base_size(), img));
    return out;
}

std::vector<ClassInfo> enumerate_classes(BaseSize m) {
    if (m.value() > 6) {
        throw capability_error(
            "enumerate_classes supports m <= 6; the classes of D_7 are beyond "
            "this build's enumeration scale");
    }
    const LatticeIndex index = enumerate_mbfs(m);
    const std::span<const std::uint64_t> words = index.words();

    std::vector<std::uint64_t> canon(words.size());
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(words.size() / 4096 + 1)));
    if (workers <= 1 || words.size() < 8192) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            canon[i] = detail::canonical_word64(words[i], m.value());
        }
    } else {
        std::atomic<std::size_t> next{0};
        constexpr std::size_t kChunk = 4096;
        auto work = [&] {
            while (true) {
                const std::size_t begin = next.fetch_add(kChunk);
                if (begin >= words.size()) return;
                const std::size_t end = std::min(begin + kChunk, words.size());
                for (std::size_t i = begin; i < end; ++i) {
                    canon[i] = detail::canonical_word64(words[i], m.value());
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::sort(canon.begin(), canon.end());
    std::vector<ClassInfo> classes;
    std::size_t i = 0;
    while (i < canon.size()) {
        std::size_t j = i;
        while (j < canon.size() && canon[j] == canon[i]) ++j;
        classes.push_back(ClassInfo{Mbf::from_truth_unchecked(m, canon[i]),
                                    static_cast<std::uint32_t>(j - i),
                                    static_cast<std::uint32_t>(classes.size())});
        i = j;
    }
    return classes;
}

} // namespace dedekind
