#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "bstab/exactmath.hpp"
#include "bstab/report.hpp"
#include "bstab/shapes.hpp"
#include "bstab/tableaux.hpp"

namespace bstab {

/// Q(lambda, k): the pairs (P, i) with P in RPP(lambda, k) and 1 <= i <= k,
/// each inducing the subshape alpha(P, i). Streamed, never stored.
class WeakEnsemble {
public:
    using Visitor = std::function<void(const ReversePlanePartition&, int level, const Partition& alpha)>;

    WeakEnsemble(Partition lambda, int k);

    const Partition& shape() const { return lambda_; }
    int k() const { return k_; }

    void for_each(const Visitor& visit, RppShard shard = {}) const;
    /// k * |RPP(lambda, k)|
    std::uint64_t size() const;

private:
    Partition lambda_;
    int k_;
};

/// Integer sums over Q(lambda, k). Combining partial totals is plain addition,
/// so shards can be accumulated independently.
struct EnsembleTotals {
    std::uint64_t rpp_count = 0;
    std::uint64_t pairs = 0;
    std::uint64_t corner_sum = 0;   ///< sum of |corners(alpha(P, i))|
    std::uint64_t outside_sum = 0;  ///< sum of |proper outside corners(alpha(P, i))|
    std::vector<std::uint64_t> toggle_in;   ///< per square of lambda, row-major
    std::vector<std::uint64_t> toggle_out;  ///< per square of lambda, row-major

    std::uint64_t jaggedness_sum() const { return corner_sum + outside_sum; }
    EnsembleTotals& operator+=(const EnsembleTotals& o);
};

/// One pass over Q(lambda, k), split across `threads` workers by RPP shard.
/// Totals do not depend on the worker count.
EnsembleTotals accumulate_weak_ensemble(const Partition& lambda, int k, int threads = 1);

/// Number of pairs inducing each subshape; subshapes that never occur are absent.
std::map<Partition, std::uint64_t> weak_distribution_counts(const Partition& lambda, int k);

Rational weak_probability(const Partition& mu, const Partition& lambda, int k);

Rational expected_jaggedness_weak(const Partition& lambda, int k, int threads = 1);

/// 2rc / (r + c) for an r-row, c-column shape.
Rational balanced_jaggedness_formula(const Partition& lambda);

/// Renders integers without a denominator, other rationals as "p/q".
std::string render(const Rational& q);

/// One report per square p of lambda: lhs = #pairs where p can be toggled
/// in, rhs = #pairs where p can be toggled out.
std::vector<VerificationReport> check_toggle_symmetric(const Partition& lambda, int k, int threads = 1);

/// Expected jaggedness over the pair stream equals 2rc/(r+c).
/// Throws PreconditionError for unbalanced shapes.
VerificationReport verify_balanced_expectation(const Partition& lambda, int k, int threads = 1);

/// Same value computed as sum over subshapes mu of Pr(mu) * jag(mu).
/// Throws PreconditionError for unbalanced shapes.
VerificationReport verify_weak_mean_by_subshape(const Partition& lambda, int k);

/// |BSSYT(lambda, k)| = krc/(r+c) * |SYT(lambda, k)|, with |Q| = k|SYT| as a detail.
/// Throws PreconditionError for unbalanced shapes.
VerificationReport verify_count_identity(const Partition& lambda, int k);

/// |BSSYT| = kab(d-1)/(a+b) * |SYT| on delta_d(b^a). d = 1 is reported as vacuous.
VerificationReport verify_conjecture_rect(int a, int b, int d, int k);

/// |Q(lambda, k)| = k * |SYT(lambda, k)|.
VerificationReport verify_ensemble_size(const Partition& lambda, int k);

/// Sum of corner counts = sum of proper-outside-corner counts = |BSSYT|,
/// for any shape.
VerificationReport verify_double_sums(const Partition& lambda, int k, int threads = 1);

/// 2|BSSYT| = k|SYT| * E[jag] for any shape.
VerificationReport verify_bridge(const Partition& lambda, int k, int threads = 1);

}  // namespace bstab
