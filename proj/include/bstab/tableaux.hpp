#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bstab/shapes.hpp"

namespace bstab {

/// Sorted, nonempty set of entries held by one square.
using EntrySet = std::vector<int>;

/// Set-valued filling of a shape, flagged so that row i entries lie in [1, k+i].
/// Squares are stored row-major. Construction only checks that the filling
/// matches the shape; violation() reports tableau-rule breaches.
class SetValuedTableau {
public:
    SetValuedTableau(Partition shape, int k);
    SetValuedTableau(Partition shape, int k, std::vector<std::vector<EntrySet>> rows);

    /// Reads "1,1,2,2/{2,4},4,4,4/5,5/6"; the shape is inferred from the rows.
    static SetValuedTableau parse(std::string_view text, int k);
    std::string to_string() const;

    const Partition& shape() const { return shape_; }
    int k() const { return k_; }
    const EntrySet& at(Cell c) const { return cells_[index(c)]; }
    EntrySet& at(Cell c) { return cells_[index(c)]; }

    /// First rule the filling breaks, or nullopt for a valid flagged tableau.
    std::optional<std::string> violation() const;
    bool is_valid() const { return !violation().has_value(); }

    friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;

private:
    std::size_t index(Cell c) const;

    Partition shape_;
    int k_;
    std::vector<std::size_t> row_start_;
    std::vector<EntrySet> cells_;
};

enum class TableauKind { SSYT, BSSYT, Other };

TableauKind classify(const SetValuedTableau& t);
std::string_view to_string(TableauKind kind);

/// Filling by integers in [0, k], weakly increasing along rows and columns.
class ReversePlanePartition {
public:
    ReversePlanePartition(Partition shape, int k);
    ReversePlanePartition(Partition shape, int k, std::vector<std::vector<int>> rows);

    /// Reads "0,0,1,1/0,2,2,2/2,2/2".
    static ReversePlanePartition parse(std::string_view text, int k);
    std::string to_string() const;

    const Partition& shape() const { return shape_; }
    int k() const { return k_; }
    int at(Cell c) const { return cells_[index(c)]; }
    int& at(Cell c) { return cells_[index(c)]; }
    /// Row-major entries.
    const std::vector<int>& entries() const { return cells_; }

    std::optional<std::string> violation() const;
    bool is_valid() const { return !violation().has_value(); }

    friend bool operator==(const ReversePlanePartition&, const ReversePlanePartition&) = default;

private:
    std::size_t index(Cell c) const;

    Partition shape_;
    int k_;
    std::vector<std::size_t> row_start_;
    std::vector<int> cells_;
};

/// Selects the RPPs whose (1,1) entry is congruent to `index` mod `count`.
/// Shards partition RPP(lambda, k) so disjoint workers can stream it.
struct RppShard {
    int index = 0;
    int count = 1;
};

using TableauVisitor = std::function<void(const SetValuedTableau&)>;
using RppVisitor = std::function<void(const ReversePlanePartition&)>;

// Enumerators fill cells in row-major order, smallest values first, and hand
// each complete filling to the visitor. The object passed to the visitor is
// reused between calls; copy it to keep it.

void for_each_ssyt(const Partition& lambda, int k, const TableauVisitor& visit);
void for_each_bssyt(const Partition& lambda, int k, const TableauVisitor& visit);
void for_each_rpp(const Partition& lambda, int k, const RppVisitor& visit, RppShard shard = {});

std::vector<SetValuedTableau> enumerate_ssyt(const Partition& lambda, int k);
std::vector<SetValuedTableau> enumerate_bssyt(const Partition& lambda, int k);
std::vector<ReversePlanePartition> enumerate_rpp(const Partition& lambda, int k);

std::uint64_t count_ssyt(const Partition& lambda, int k);
std::uint64_t count_bssyt(const Partition& lambda, int k);
std::uint64_t count_rpp(const Partition& lambda, int k);

/// Adds t to every entry of row t.
SetValuedTableau rpp_to_ssyt(const ReversePlanePartition& p);
/// Subtracts t from every entry of row t. Throws std::invalid_argument if the
/// input is not a flagged SSYT.
ReversePlanePartition ssyt_to_rpp(const SetValuedTableau& t);

/// alpha(P, i): squares whose entry is strictly less than i. Requires 1 <= i <= k.
Partition induced_subshape(const ReversePlanePartition& p, int level);

}  // namespace bstab
