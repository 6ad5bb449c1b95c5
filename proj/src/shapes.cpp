#include "bstab/shapes.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace bstab {

std::string Cell::to_string() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw std::invalid_argument("partition has a negative part");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts are not weakly decreasing");
        }
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) {
        return Partition();
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw std::invalid_argument("malformed partition: \"" + std::string(text) + "\"");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(cols()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) {
            ++out[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(out));
}

Partition rect_staircase(int a, int b, int d) {
    if (a < 1 || b < 1 || d < 1) {
        throw std::invalid_argument("rect_staircase: a, b, d must be positive");
    }
    std::vector<int> parts;
    for (int i = 1; i <= a * (d - 1); ++i) {
        parts.push_back(b * (d - 1 - (i - 1) / a));
    }
    return Partition(std::move(parts));
}

bool subshape_contained(const Partition& mu, const Partition& lambda) {
    if (mu.rows() > lambda.rows()) {
        return false;
    }
    for (int i = 1; i <= mu.rows(); ++i) {
        if (mu.part(i) > lambda.part(i)) {
            return false;
        }
    }
    return true;
}

namespace {

void require_contained(const Partition& mu, const Partition& lambda) {
    if (!subshape_contained(mu, lambda)) {
        throw std::invalid_argument("(" + mu.to_string() + ") is not a subshape of (" + lambda.to_string() + ")");
    }
}

void subshapes_from(const Partition& lambda, std::vector<int>& prefix, std::vector<Partition>& out) {
    std::size_t row = prefix.size();
    if (row == lambda.parts().size()) {
        out.emplace_back(prefix);
        return;
    }
    int cap = lambda.parts()[row];
    if (row > 0) {
        cap = std::min(cap, prefix.back());
    }
    for (int v = 0; v <= cap; ++v) {
        prefix.push_back(v);
        subshapes_from(lambda, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_subshapes(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    subshapes_from(lambda, prefix, out);
    return out;
}

std::vector<Cell> corners(const Partition& mu) {
    std::vector<Cell> out;
    for (int i = 1; i <= mu.rows(); ++i) {
        if (mu.part(i) > mu.part(i + 1)) {
            out.push_back({i, mu.part(i)});
        }
    }
    return out;
}

int corner_count(const Partition& mu) {
    int n = 0;
    for (int i = 1; i <= mu.rows(); ++i) {
        n += mu.part(i) > mu.part(i + 1) ? 1 : 0;
    }
    return n;
}

std::vector<Cell> outside_corners(const Partition& mu) {
    std::vector<Cell> out;
    out.push_back({1, mu.part(1) + 1});
    for (int i = 2; i <= mu.rows(); ++i) {
        if (mu.part(i - 1) > mu.part(i)) {
            out.push_back({i, mu.part(i) + 1});
        }
    }
    if (!mu.empty()) {
        out.push_back({mu.rows() + 1, 1});
    }
    return out;
}

std::vector<Cell> proper_outside_corners(const Partition& mu, const Partition& lambda) {
    require_contained(mu, lambda);
    std::vector<Cell> out;
    for (Cell c : outside_corners(mu)) {
        if (lambda.contains(c)) {
            out.push_back(c);
        }
    }
    return out;
}

int proper_outside_corner_count(const Partition& mu, const Partition& lambda) {
    // Allocation-free form of proper_outside_corners(mu, lambda).size().
    int n = 0;
    for (int i = 1; i <= mu.rows() + 1; ++i) {
        bool addable = i == 1 || mu.part(i - 1) > mu.part(i);
        if (addable && mu.part(i) < lambda.part(i)) {
            ++n;
        }
    }
    return n;
}

int jaggedness(const Partition& mu, const Partition& lambda) {
    require_contained(mu, lambda);
    return corner_count(mu) + proper_outside_corner_count(mu, lambda);
}

std::string LatticePath::to_string() const {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) {
        out += s == Step::East ? 'E' : 'N';
    }
    return out;
}

LatticePath lattice_path(const Partition& mu, const Partition& lambda) {
    require_contained(mu, lambda);
    LatticePath path;
    const int r = lambda.rows();
    int x = 0;
    for (int row = r; row >= 1; --row) {
        for (; x < mu.part(row); ++x) {
            path.steps.push_back(Step::East);
        }
        path.steps.push_back(Step::North);
    }
    for (; x < lambda.cols(); ++x) {
        path.steps.push_back(Step::East);
    }

    // Walk the path tracking the lattice point (x, y), y counted from the bottom.
    x = 0;
    int y = 0;
    for (std::size_t s = 0; s + 1 < path.steps.size(); ++s) {
        if (path.steps[s] == Step::East) {
            ++x;
            if (path.steps[s + 1] == Step::North) {
                ++path.left_turns;
            }
        } else {
            ++y;
            // North from (x, y-1) to (x, y), then East: the bordered square is
            // row r - y + 1, column x + 1.
            if (path.steps[s + 1] == Step::East && lambda.contains({r - y + 1, x + 1})) {
                ++path.right_turns;
            }
        }
    }
    return path;
}

namespace {

void require_cell_in(Cell p, const Partition& lambda) {
    if (!lambda.contains(p)) {
        throw std::invalid_argument("cell " + p.to_string() + " is not in (" + lambda.to_string() + ")");
    }
}

}  // namespace

bool can_toggle_in(Cell p, const Partition& mu, const Partition& lambda) {
    require_cell_in(p, lambda);
    require_contained(mu, lambda);
    // p is addable: p lies just right of row p.row, and the row above is longer.
    return p.col == mu.part(p.row) + 1 && (p.row == 1 || mu.part(p.row - 1) >= p.col);
}

bool can_toggle_out(Cell p, const Partition& mu, const Partition& lambda) {
    require_cell_in(p, lambda);
    require_contained(mu, lambda);
    return p.col == mu.part(p.row) && mu.part(p.row + 1) < p.col;
}

bool is_balanced(const Partition& lambda) {
    if (lambda.empty()) {
        throw std::invalid_argument("balance is undefined for the empty shape");
    }
    const long r = lambda.rows();
    const long c = lambda.cols();
    for (int i = 1; i < lambda.rows(); ++i) {
        if (lambda.part(i) > lambda.part(i + 1)) {
            // Turning point sits at (lambda_{i+1}, r - i) measured from the bottom-left.
            if (static_cast<long>(lambda.part(i + 1)) * r != (r - i) * c) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace bstab
