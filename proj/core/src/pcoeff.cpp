#include "dedekind/pcoeff.hpp"

#include <bit>
#include <cassert>

#include "dedekind/lattice.hpp"

namespace dedekind {

namespace detail {

int extract_connector_nodes(std::uint64_t alpha_truth, std::uint64_t gamma_truth,
                            int m, std::uint32_t* out_nodes) {
    // Maximal true sets of gamma: S is out as soon as some S + {i} is true.
    std::uint64_t non_max = 0;
    for (int i = 0; i < m; ++i) {
        std::uint64_t with_i = 0;
        const unsigned n = 1u << m;
        const unsigned stride = 1u << i;
        // Indices containing element i form blocks of length 2^i every 2^(i+1).
        for (unsigned base = stride; base < n; base += 2 * stride) {
            with_i |= ((gamma_truth >> base) & ((stride >= 64) ? ~std::uint64_t{0}
                                                               : ((std::uint64_t{1} << stride) - 1)))
                      << (base - stride);
        }
        non_max |= with_i;
    }
    std::uint64_t nodes = gamma_truth & ~non_max & ~alpha_truth;
    int count = 0;
    while (nodes != 0) {
        const int s = std::countr_zero(nodes);
        nodes &= nodes - 1;
        out_nodes[count++] = static_cast<std::uint32_t>(s);
    }
    return count;
}

int count_components(std::uint64_t alpha_truth, const std::uint32_t* nodes, int n) {
    // Flood fill on a node bitmask: seed the lowest unvisited node and
    // expand by adjacency until the frontier empties.
    std::uint64_t remaining = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    int components = 0;
    while (remaining != 0) {
        std::uint64_t frontier = remaining & (~remaining + 1);
        remaining &= ~frontier;
        while (frontier != 0 && remaining != 0) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f != 0) {
                const int i = std::countr_zero(f);
                f &= f - 1;
                std::uint64_t r = remaining;
                while (r != 0) {
                    const int j = std::countr_zero(r);
                    r &= r - 1;
                    const std::uint32_t common = nodes[i] & nodes[j];
                    if (((alpha_truth >> common) & 1u) == 0) next |= std::uint64_t{1} << j;
                }
            }
            remaining &= ~next;
            frontier = next;
        }
        ++components;
    }
    return components;
}

PermSumWords permutation_sum_words(std::uint64_t alpha_truth,
                                   std::span<const std::uint64_t> orbit, int m) {
    PermSumWords result;
    std::uint32_t nodes[64];
    for (std::uint64_t gamma : orbit) {
        if ((alpha_truth & ~gamma) != 0) continue;
        const int n = extract_connector_nodes(alpha_truth, gamma, m, nodes);
        const int c = count_components(alpha_truth, nodes, n);
        result.pcoeff_sum += std::uint64_t{1} << c;
        ++result.valid_count;
    }
    return result;
}

} // namespace detail

ConnectorGraph ConnectorGraph::build(const Mbf& alpha, const Mbf& gamma) {
    if (alpha.base_size() != gamma.base_size()) {
        throw input_shape_error("connector graph: base sizes differ");
    }
    std::vector<PointMask> nodes;
    const AntiChain gamma_antichain = to_antichain(gamma);
    for (PointMask x : gamma_antichain.elements()) {
        if (!alpha(x)) nodes.push_back(x);
    }
    return ConnectorGraph(alpha, std::move(nodes));
}

int connector_count(const Mbf& alpha, const Mbf& gamma) {
    if (alpha.base_size() != gamma.base_size()) {
        throw input_shape_error("connector_count: base sizes differ");
    }
    assert(leq(alpha, gamma) && "connector_count requires alpha <= gamma");
    const int m = alpha.base_size().value();
    if (m <= 6) {
        std::uint32_t nodes[64];
        const int n = detail::extract_connector_nodes(
            static_cast<std::uint64_t>(alpha.truth()),
            static_cast<std::uint64_t>(gamma.truth()), m, nodes);
        return detail::count_components(static_cast<std::uint64_t>(alpha.truth()),
                                        nodes, n);
    }
    // m = 7 path through the generic graph type.
    const ConnectorGraph graph = ConnectorGraph::build(alpha, gamma);
    const std::size_t n = graph.size();
    std::vector<bool> visited(n, false);
    int components = 0;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (visited[seed]) continue;
        ++components;
        std::vector<std::size_t> stack{seed};
        visited[seed] = true;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (!visited[j] && graph.adjacent(i, j)) {
                    visited[j] = true;
                    stack.push_back(j);
                }
            }
        }
    }
    return components;
}

BigInt pcoeff_value(const Mbf& alpha, const Mbf& gamma) {
    return BigInt(1) << connector_count(alpha, gamma);
}

BigInt solution_count_oracle(const Mbf& alpha, const Mbf& beta) {
    if (alpha.base_size() != beta.base_size()) {
        throw input_shape_error("solution_count_oracle: base sizes differ");
    }
    const int m = alpha.base_size().value();
    if (m > 4) {
        throw capability_error(
            "solution_count_oracle scans D_m x D_m exhaustively and supports m <= 4");
    }
    if (!leq(alpha, beta)) return BigInt(0);

    const std::uint64_t a = static_cast<std::uint64_t>(alpha.truth());
    const std::uint64_t b = static_cast<std::uint64_t>(beta.truth());
    const LatticeIndex index = enumerate_mbfs(alpha.base_size());
    std::vector<std::uint64_t> interval;
    for (std::uint64_t w : index.words()) {
        if ((a & ~w) == 0 && (w & ~b) == 0) interval.push_back(w);
    }
    std::uint64_t solutions = 0;
    for (std::uint64_t chi : interval) {
        for (std::uint64_t ups : interval) {
            if ((chi | ups) == b && (chi & ups) == a) ++solutions;
        }
    }
    return BigInt(solutions);
}

PermSumResult permutation_sum(const Mbf& alpha, const ClassInfo& beta_class) {
    if (alpha.base_size() != beta_class.rep.base_size()) {
        throw input_shape_error("permutation_sum: base sizes differ");
    }
    const int m = alpha.base_size().value();
    if (m <= 6) {
        const std::vector<std::uint64_t> orbit = detail::orbit_words64(
            static_cast<std::uint64_t>(beta_class.rep.truth()), m);
        const detail::PermSumWords sum = detail::permutation_sum_words(
            static_cast<std::uint64_t>(alpha.truth()), orbit, m);
        return PermSumResult{BigInt(sum.pcoeff_sum), sum.valid_count};
    }
    PermSumResult result{BigInt(0), 0};
    for (const Mbf& gamma : distinct_equivalents(beta_class.rep)) {
        if (!leq(alpha, gamma)) continue;
        result.pcoeff_sum += pcoeff_value(alpha, gamma);
        ++result.valid_count;
    }
    return result;
}

} // namespace dedekind
