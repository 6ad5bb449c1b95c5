#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bstab/exactmath.hpp"
#include "bstab/report.hpp"
#include "bstab/shapes.hpp"

namespace bstab {

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless one_line is a permutation of 1..n.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    /// w_0 = n (n-1) ... 1
    static Permutation longest(int n);
    /// "321" for n <= 9 (no separators), otherwise comma-separated.
    static Permutation parse(std::string_view text);
    std::string to_string() const;

    int size() const { return static_cast<int>(word_.size()); }
    /// 1-based value at position i.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return word_; }

    /// u * s_i: swaps positions i and i+1.
    Permutation times_simple(int i) const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// Sequence of simple-transposition indices, each in [1, n-1].
class HeckeWord {
public:
    HeckeWord(int n, std::vector<int> letters);

    int n() const { return n_; }
    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

private:
    int n_;
    std::vector<int> letters_;
};

/// Number of inversions.
int length(const Permutation& w);

/// c_i(w) = #{ j > i : w_j < w_i }.
std::vector<int> lehmer_code(const Permutation& w);

/// Inverse of lehmer_code; requires 0 <= c_i <= n - i.
Permutation from_lehmer_code(const std::vector<int>& code);

/// Smallest n admitting a permutation of S_n with Lehmer code lambda:
/// max_i (lambda_i + i), and 1 for the empty shape.
int minimal_dominant_size(const Partition& lambda);

/// The permutation of S_n whose Lehmer code is lambda padded with zeros.
/// Throws when lambda_i > n - i for some row.
Permutation dominant_from_partition(const Partition& lambda, int n);

/// 132-avoidance by direct pattern scan.
bool is_dominant(const Permutation& w);
bool has_nonincreasing_code(const Permutation& w);

/// u * s_i when that lengthens u, else u.
Permutation demazure_step(const Permutation& u, int i);

/// Left fold of demazure_step from the identity.
Permutation hecke_product(const HeckeWord& word);

/// Bruhat order via rank-matrix comparison.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// FK(w, ell) = sum over 0-Hecke words (i_1..i_ell) of w of prod (x + i_j).
/// Dynamic programme over Demazure-product states; states not below w in
/// Bruhat order are dropped since the product can only grow. `threads`
/// splits each level's state expansion.
IntPolynomial fk_polynomial(const Permutation& w, int ell, int threads = 1);

/// 2rc / (ell (r + c)) with ell = |lambda|: the coefficient of x in the
/// normalized FK ratio for a balanced shape.
Rational fk_ratio_slope(const Partition& lambda);

/// FK(w_0, ell_0) against C(n,2)! prod_{i<j} (2x+i+j-1)/(i+j-1); the form
/// with numerator x+i+j-1 is evaluated alongside and reported in params.
/// Requires 2 <= n <= 5.
VerificationReport verify_fk_longest(int n);

/// FK(w, l+1) * l(r+c) = FK(w, l) * C(l+1, 2) * (2rcx + l(r+c)) as polynomials,
/// and at each x = k in k_values. Throws PreconditionError unless balanced.
VerificationReport verify_fk_ratio(const Partition& lambda, const std::vector<int>& k_values, int threads = 1);

/// FK_{w,l+1}(k) |SYT| = FK_{w,l}(k) (C(l+1,2) |SYT| + (l+1) |BSSYT|) for the
/// dominant w with code lambda.
VerificationReport verify_fk_bssyt_relation(const Partition& lambda, int k, int threads = 1);

}  // namespace bstab
