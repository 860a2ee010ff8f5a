#ifndef DEDEKIND_PCOEFF_HPP
#define DEDEKIND_PCOEFF_HPP

#include <cstdint>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/equiv.hpp"
#include "dedekind/mbf.hpp"

namespace dedekind {

/// The graph whose components the connector number counts: nodes are the
/// maximal true sets X of gamma with alpha(X) = False, and X, Y are
/// adjacent iff alpha(X & Y) = False.
class ConnectorGraph {
public:
    static ConnectorGraph build(const Mbf& alpha, const Mbf& gamma);

    std::span<const PointMask> nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    bool adjacent(std::size_t i, std::size_t j) const {
        return !alpha_(PointMask{nodes_[i].bits & nodes_[j].bits});
    }

private:
    ConnectorGraph(Mbf alpha, std::vector<PointMask> nodes)
        : alpha_(alpha), nodes_(std::move(nodes)) {}

    Mbf alpha_;
    std::vector<PointMask> nodes_;
};

/// The connector number C: connected components of the graph above,
/// found by flood fill. Zero iff the node set is empty (in particular
/// when alpha = gamma). Callers guarantee alpha <= gamma; debug builds
/// assert it, release builds skip the check for speed.
int connector_count(const Mbf& alpha, const Mbf& gamma);

/// 2^C, the number of ordered pairs (chi, ups) with chi v ups = gamma and
/// chi ^ ups = alpha.
BigInt pcoeff_value(const Mbf& alpha, const Mbf& gamma);

/// Independent count of the same solution pairs by exhaustive scan of
/// [alpha, beta] x [alpha, beta]. The defining cross-check for the
/// connector kernel. m <= 4; returns 0 when alpha is not below beta.
BigInt solution_count_oracle(const Mbf& alpha, const Mbf& beta);

/// Result of summing P-coefficients over the distinct equivalents of one
/// bottom class: the sum of 2^C over the valid gamma, and how many gamma
/// were valid (alpha <= gamma).
struct PermSumResult {
    BigInt pcoeff_sum;
    std::uint64_t valid_count = 0;
};

/// Iterates the orbit_size distinct equivalents gamma of beta_class.rep,
/// keeps those with alpha <= gamma, and sums 2^{C(alpha, gamma)}.
/// Iterating distinct images with weight 1 equals iterating all m!
/// permutations weighted by orbit_size/m!, since each distinct image
/// repeats exactly m!/orbit_size times.
PermSumResult permutation_sum(const Mbf& alpha, const ClassInfo& beta_class);

namespace detail {

/// Word-level kernel used by the pipeline hot path. `orbit` holds the
/// distinct equivalents of the bottom class rep as truth words.
struct PermSumWords {
    std::uint64_t pcoeff_sum = 0;
    std::uint32_t valid_count = 0;
};
PermSumWords permutation_sum_words(std::uint64_t alpha_truth,
                                   std::span<const std::uint64_t> orbit, int m);

/// Nodes of the connector graph as masks; returns the node count.
int extract_connector_nodes(std::uint64_t alpha_truth, std::uint64_t gamma_truth,
                            int m, std::uint32_t* out_nodes);

/// Flood-fill component count over extracted nodes.
int count_components(std::uint64_t alpha_truth, const std::uint32_t* nodes, int n);

} // namespace detail

} // namespace dedekind

#endif // DEDEKIND_PCOEFF_HPP
