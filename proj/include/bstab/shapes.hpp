#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bstab {

/// A square of a Young diagram, 1-based (row, column).
struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
    std::string to_string() const;
};

/// Weakly decreasing sequence of positive parts. Serves as a Young diagram
/// and as a subshape (order ideal of a diagram's cell poset).
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are stripped; throws std::invalid_argument on negative
    /// or increasing parts.
    explicit Partition(std::vector<int> parts);

    /// "4,4,2,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_.front(); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    /// 1-based part; 0 past the last row.
    int part(int row) const {
        return row >= 1 && row <= rows() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }
    bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }
    Partition conjugate() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// delta_d(b^a): the staircase (d-1, ..., 1) with each square blown up to an
/// a x b rectangle. d = 1 gives the empty shape.
Partition rect_staircase(int a, int b, int d);

bool subshape_contained(const Partition& mu, const Partition& lambda);

/// Every subshape of lambda exactly once, in lexicographic order of parts.
std::vector<Partition> all_subshapes(const Partition& lambda);

/// Removable cells, ordered by row.
std::vector<Cell> corners(const Partition& mu);
int corner_count(const Partition& mu);

/// Addable cells, ordered by row, including the square right of row 1 and
/// the square below column 1.
std::vector<Cell> outside_corners(const Partition& mu);

/// Outside corners of mu lying inside lambda. Throws unless mu is contained in lambda.
std::vector<Cell> proper_outside_corners(const Partition& mu, const Partition& lambda);
int proper_outside_corner_count(const Partition& mu, const Partition& lambda);

/// Corners plus proper outside corners.
int jaggedness(const Partition& mu, const Partition& lambda);

enum class Step { East, North };

/// Boundary of mu inside lambda's bounding box, bottom-left to top-right.
struct LatticePath {
    std::vector<Step> steps;
    int left_turns = 0;   ///< east step followed by a north step
    int right_turns = 0;  ///< north then east, both bordering a square of lambda

    std::string to_string() const;  ///< e.g. "NNENEEEN"
};

LatticePath lattice_path(const Partition& mu, const Partition& lambda);

bool can_toggle_in(Cell p, const Partition& mu, const Partition& lambda);
bool can_toggle_out(Cell p, const Partition& mu, const Partition& lambda);

/// Every outward corner of lambda has its turning point on the line joining
/// the bottom-left and top-right corners of the bounding box. Throws on the
/// empty shape.
bool is_balanced(const Partition& lambda);

}  // namespace bstab
