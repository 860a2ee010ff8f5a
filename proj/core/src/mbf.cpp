#include "dedekind/mbf.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>

namespace dedekind {

namespace {

/// Mask over truth indices whose subset contains element i.
TruthWord has_element_mask(int i, int m) {
    TruthWord out = 0;
    const unsigned n = 1u << m;
    for (unsigned s = 0; s < n; ++s) {
        if ((s >> i) & 1u) out |= TruthWord{1} << s;
    }
    return out;
}

void require_same_m(const Mbf& f, const Mbf& g, const char* op) {
    if (f.base_size() != g.base_size()) {
        throw input_shape_error(std::string(op) + ": base sizes differ (" +
                                std::to_string(f.base_size().value()) + " vs " +
                                std::to_string(g.base_size().value()) + ")");
    }
}

} // namespace

bool is_monotone(TruthWord truth, BaseSize m) {
    const TruthWord full = detail::full_truth(m.value());
    if ((truth & ~full) != 0) {
        throw input_shape_error("truth table has bits beyond 2^" +
                                std::to_string(m.value()) + " entries");
    }
    // Downward closed: every true set stays true when one element is removed.
    for (int i = 0; i < m.value(); ++i) {
        const TruthWord with_i = truth & has_element_mask(i, m.value());
        if (((with_i >> (1u << i)) & ~truth) != 0) return false;
    }
    return true;
}

Mbf Mbf::from_truth(BaseSize m, TruthWord truth) {
    if (!is_monotone(truth, m)) {
        throw invariant_error("truth table is not downward closed");
    }
    return Mbf(m, truth);
}

bool leq(const Mbf& f, const Mbf& g) {
    require_same_m(f, g, "leq");
    return (f.truth() & ~g.truth()) == 0;
}

Mbf join(const Mbf& f, const Mbf& g) {
    require_same_m(f, g, "join");
    return Mbf::from_truth_unchecked(f.base_size(), f.truth() | g.truth());
}

Mbf meet(const Mbf& f, const Mbf& g) {
    require_same_m(f, g, "meet");
    return Mbf::from_truth_unchecked(f.base_size(), f.truth() & g.truth());
}

Mbf dual(const Mbf& f) {
    const int m = f.base_size().value();
    const unsigned n = 1u << m;
    const std::uint32_t full = n - 1;
    TruthWord out = 0;
    for (unsigned s = 0; s < n; ++s) {
        if (!detail::truth_bit(f.truth(), full ^ s)) out |= TruthWord{1} << s;
    }
    return Mbf::from_truth_unchecked(f.base_size(), out);
}

AntiChain AntiChain::from_elements(BaseSize m, std::vector<PointMask> elems) {
    const std::uint32_t limit = m.point_count();
    for (PointMask e : elems) {
        if (e.bits >= limit) {
            throw input_shape_error("antichain mask " + std::to_string(e.bits) +
                                    " out of range for m=" + std::to_string(m.value()));
        }
    }
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const std::uint32_t a = elems[i].bits;
            const std::uint32_t b = elems[j].bits;
            const std::uint32_t common = a & b;
            if (common == a || common == b) {
                throw invariant_error("antichain elements " + std::to_string(a) +
                                      " and " + std::to_string(b) + " are comparable");
            }
        }
    }
    return AntiChain(m, std::move(elems));
}

AntiChain to_antichain(const Mbf& f) {
    const int m = f.base_size().value();
    const unsigned n = 1u << m;
    // S is maximal iff no superset S + {i} is still true.
    TruthWord non_max = 0;
    for (int i = 0; i < m; ++i) {
        non_max |= (f.truth() & has_element_mask(i, m)) >> (1u << i);
    }
    TruthWord maximal = f.truth() & ~non_max;
    std::vector<PointMask> elems;
    for (unsigned s = 0; s < n; ++s) {
        if (detail::truth_bit(maximal, s)) elems.push_back(PointMask{s});
    }
    return AntiChain::from_elements(f.base_size(), std::move(elems));
}

Mbf from_antichain(const AntiChain& ac) {
    TruthWord out = 0;
    for (PointMask x : ac.elements()) {
        // All subsets of x, by the standard submask walk.
        std::uint32_t sub = x.bits;
        while (true) {
            out |= TruthWord{1} << sub;
            if (sub == 0) break;
            sub = (sub - 1) & x.bits;
        }
    }
    return Mbf::from_truth_unchecked(ac.base_size(), out);
}

Permutation Permutation::identity(BaseSize m) {
    std::array<std::uint8_t, 7> map{};
    for (int i = 0; i < m.value(); ++i) map[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return Permutation(m, map);
}

Permutation Permutation::from_mapping(BaseSize m, std::span<const int> mapping) {
    if (static_cast<int>(mapping.size()) != m.value()) {
        throw input_shape_error("permutation mapping length " +
                                std::to_string(mapping.size()) + " does not match m=" +
                                std::to_string(m.value()));
    }
    std::array<bool, 7> seen{};
    std::array<std::uint8_t, 7> map{};
    for (int i = 0; i < m.value(); ++i) {
        const int v = mapping[static_cast<std::size_t>(i)];
        if (v < 0 || v >= m.value() || seen[static_cast<std::size_t>(v)]) {
            throw invariant_error("permutation mapping is not a bijection on {0.." +
                                  std::to_string(m.value() - 1) + "}");
        }
        seen[static_cast<std::size_t>(v)] = true;
        map[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }
    return Permutation(m, map);
}

Permutation Permutation::inverse() const {
    std::array<int, 7> inv{};
    for (int i = 0; i < m_.value(); ++i) inv[map_[static_cast<std::size_t>(i)]] = i;
    return from_mapping(m_, std::span<const int>(inv.data(), static_cast<std::size_t>(m_.value())));
}

PointMask Permutation::apply(PointMask s) const {
    std::uint32_t out = 0;
    for (int i = 0; i < m_.value(); ++i) {
        if ((s.bits >> i) & 1u) out |= 1u << map_[static_cast<std::size_t>(i)];
    }
    return PointMask{out};
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.base_size() != b.base_size()) {
        throw input_shape_error("compose: base sizes differ");
    }
    std::array<int, 7> map{};
    for (int i = 0; i < a.base_size().value(); ++i) map[static_cast<std::size_t>(i)] = a.image(b.image(i));
    return Permutation::from_mapping(
        a.base_size(), std::span<const int>(map.data(), static_cast<std::size_t>(a.base_size().value())));
}

std::vector<Permutation> all_permutations(BaseSize m) {
    std::array<int, 7> map{};
    std::iota(map.begin(), map.begin() + m.value(), 0);
    std::vector<Permutation> out;
    const auto first = map.begin();
    const auto last = map.begin() + m.value();
    do {
        out.push_back(Permutation::from_mapping(
            m, std::span<const int>(map.data(), static_cast<std::size_t>(m.value()))));
    } while (std::next_permutation(first, last));
    return out;
}

Mbf apply_permutation(const Mbf& f, const Permutation& p) {
    if (f.base_size() != p.base_size()) {
        throw input_shape_error("apply_permutation: base sizes differ");
    }
    const unsigned n = f.base_size().point_count();
    TruthWord out = 0;
    for (unsigned s = 0; s < n; ++s) {
        if (detail::truth_bit(f.truth(), s)) {
            out |= TruthWord{1} << p.apply(PointMask{s}).bits;
        }
    }
    return Mbf::from_truth_unchecked(f.base_size(), out);
}

std::string to_string(const Mbf& f) {
    const int m = f.base_size().value();
    const unsigned digits = std::max(1u, (1u << m) / 4);
    std::string hex(digits, '0');
    static const char* alphabet = "0123456789abcdef";
    for (unsigned d = 0; d < digits; ++d) {
        const unsigned nibble =
            static_cast<unsigned>((f.truth() >> (4 * (digits - 1 - d))) & 0xF);
        hex[d] = alphabet[nibble];
    }
    return "m=" + std::to_string(m) + ":" + hex;
}

Mbf parse_mbf(std::string_view text) {
    if (text.size() < 4 || text.substr(0, 2) != "m=") {
        throw parse_error(0, "expected 'm=<m>:<hex>', got '" + std::string(text) + "'");
    }
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw parse_error(0, "missing ':' in '" + std::string(text) + "'");
    }
    int m_value = -1;
    const auto [ptr, ec] =
        std::from_chars(text.data() + 2, text.data() + colon, m_value);
    if (ec != std::errc{} || ptr != text.data() + colon) {
        throw parse_error(0, "invalid base size in '" + std::string(text) + "'");
    }
    const BaseSize m(m_value);
    const std::string_view hex = text.substr(colon + 1);
    const unsigned digits = std::max(1u, (1u << m.value()) / 4);
    if (hex.size() != digits) {
        throw parse_error(0, "expected " + std::to_string(digits) + " hex digits for m=" +
                                 std::to_string(m.value()) + ", got " +
                                 std::to_string(hex.size()));
    }
    TruthWord truth = 0;
    for (char c : hex) {
        unsigned nibble = 0;
        if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a') + 10;
        else throw parse_error(0, std::string("invalid hex digit '") + c + "'");
        truth = (truth << 4) | nibble;
    }
    return Mbf::from_truth(m, truth);
}

std::string to_string(const AntiChain& ac) {
    std::string out = "{";
    bool first = true;
    for (PointMask e : ac.elements()) {
        if (!first) out += ",";
        out += std::to_string(e.bits);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace dedekind
