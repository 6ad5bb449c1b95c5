#include "bstab/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace bstab {

namespace {

std::vector<std::size_t> row_starts(const Partition& shape) {
    std::vector<std::size_t> out;
    std::size_t acc = 0;
    for (int p : shape.parts()) {
        out.push_back(acc);
        acc += static_cast<std::size_t>(p);
    }
    out.push_back(acc);
    return out;
}

void require_positive_k(int k) {
    if (k < 1) {
        throw std::invalid_argument("flag bound k must be positive, got " + std::to_string(k));
    }
}

int parse_int(std::string_view token, std::string_view context) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        throw std::invalid_argument("malformed tableau: \"" + std::string(context) + "\"");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos));
        if (next == std::string_view::npos) {
            return out;
        }
        pos = next + 1;
    }
}

// One row of a set-valued tableau: "{2,4},4,4" -> [[2,4],[4],[4]].
std::vector<EntrySet> parse_set_row(std::string_view row, std::string_view context) {
    std::vector<EntrySet> out;
    std::size_t pos = 0;
    while (pos <= row.size()) {
        if (pos < row.size() && row[pos] == '{') {
            std::size_t close = row.find('}', pos);
            if (close == std::string_view::npos) {
                throw std::invalid_argument("unbalanced brace in tableau: \"" + std::string(context) + "\"");
            }
            EntrySet set;
            for (auto tok : split(row.substr(pos + 1, close - pos - 1), ',')) {
                set.push_back(parse_int(tok, context));
            }
            out.push_back(std::move(set));
            pos = close + 1;
            if (pos < row.size() && row[pos] != ',') {
                throw std::invalid_argument("malformed tableau: \"" + std::string(context) + "\"");
            }
        } else {
            std::size_t comma = row.find(',', pos);
            std::string_view tok = row.substr(pos, comma == std::string_view::npos ? row.size() - pos : comma - pos);
            out.push_back({parse_int(tok, context)});
            pos = comma == std::string_view::npos ? row.size() : comma;
        }
        if (pos >= row.size()) {
            break;
        }
        ++pos;  // skip ','
    }
    return out;
}

Partition shape_of_rows(std::size_t rows, const auto& row_length) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < rows; ++i) {
        parts.push_back(static_cast<int>(row_length(i)));
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) {
            throw std::invalid_argument("row lengths do not form a partition");
        }
    }
    if (!parts.empty() && parts.back() == 0) {
        throw std::invalid_argument("tableau has an empty row");
    }
    return Partition(std::move(parts));
}

// Row-major backtracking filler shared by the SSYT, BSSYT and RPP enumerators.
// Each square holds an interval [lo, hi]; lo == hi except at the widened
// square, which receives a doubleton {lo < hi}.
class Filler {
public:
    Filler(const Partition& shape, int min_value, std::vector<int> row_max, bool strict_columns, long wide)
        : min_value_(min_value),
          row_max_(std::move(row_max)),
          strict_columns_(strict_columns),
          wide_(wide) {
        for (int i = 1; i <= shape.rows(); ++i) {
            for (int j = 1; j <= shape.part(i); ++j) {
                long idx = static_cast<long>(row_.size());
                row_.push_back(i - 1);
                left_.push_back(j > 1 ? idx - 1 : -1);
                up_.push_back(i > 1 ? idx - shape.part(i - 1) : -1);
            }
        }
        lo_.assign(row_.size(), 0);
        hi_.assign(row_.size(), 0);
    }

    template <typename Leaf>
    void run(Leaf&& leaf, RppShard shard) {
        shard_ = shard;
        place(0, leaf);
    }

    const std::vector<int>& lo() const { return lo_; }
    const std::vector<int>& hi() const { return hi_; }

private:
    template <typename Leaf>
    void place(std::size_t idx, Leaf& leaf) {
        if (idx == row_.size()) {
            leaf();
            return;
        }
        int lower = min_value_;
        if (left_[idx] >= 0) {
            lower = std::max(lower, hi_[static_cast<std::size_t>(left_[idx])]);
        }
        if (up_[idx] >= 0) {
            lower = std::max(lower, hi_[static_cast<std::size_t>(up_[idx])] + (strict_columns_ ? 1 : 0));
        }
        const int upper = row_max_[static_cast<std::size_t>(row_[idx])];
        const bool sharded = idx == 0 && shard_.count > 1;
        for (int a = lower; a <= upper; ++a) {
            if (sharded && a % shard_.count != shard_.index) {
                continue;
            }
            lo_[idx] = a;
            if (static_cast<long>(idx) == wide_) {
                for (int b = a + 1; b <= upper; ++b) {
                    hi_[idx] = b;
                    place(idx + 1, leaf);
                }
            } else {
                hi_[idx] = a;
                place(idx + 1, leaf);
            }
        }
    }

    int min_value_;
    std::vector<int> row_max_;
    bool strict_columns_;
    long wide_;
    RppShard shard_;
    std::vector<int> row_;
    std::vector<long> left_;
    std::vector<long> up_;
    std::vector<int> lo_;
    std::vector<int> hi_;
};

std::vector<int> flag_bounds(const Partition& lambda, int k) {
    std::vector<int> out;
    for (int i = 1; i <= lambda.rows(); ++i) {
        out.push_back(k + i);
    }
    return out;
}

}  // namespace

// ---- SetValuedTableau --------------------------------------------------

SetValuedTableau::SetValuedTableau(Partition shape, int k)
    : shape_(std::move(shape)), k_(k), row_start_(row_starts(shape_)) {
    require_positive_k(k_);
    cells_.assign(static_cast<std::size_t>(shape_.size()), EntrySet{1});
}

SetValuedTableau::SetValuedTableau(Partition shape, int k, std::vector<std::vector<EntrySet>> rows)
    : shape_(std::move(shape)), k_(k), row_start_(row_starts(shape_)) {
    require_positive_k(k_);
    if (static_cast<int>(rows.size()) != shape_.rows()) {
        throw std::invalid_argument("tableau row count does not match its shape");
    }
    for (int i = 1; i <= shape_.rows(); ++i) {
        auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != shape_.part(i)) {
            throw std::invalid_argument("tableau row " + std::to_string(i) + " does not match its shape");
        }
        for (auto& set : row) {
            cells_.push_back(std::move(set));
        }
    }
}

SetValuedTableau SetValuedTableau::parse(std::string_view text, int k) {
    std::vector<std::vector<EntrySet>> rows;
    if (!text.empty()) {
        // Split on '/' (braces never contain '/').
        for (auto row : split(text, '/')) {
            rows.push_back(parse_set_row(row, text));
        }
    }
    Partition shape = shape_of_rows(rows.size(), [&](std::size_t i) { return rows[i].size(); });
    for (auto& row : rows) {
        for (auto& set : row) {
            if (set.empty()) {
                throw std::invalid_argument("tableau square holds an empty set");
            }
            if (!std::is_sorted(set.begin(), set.end()) || std::adjacent_find(set.begin(), set.end()) != set.end()) {
                throw std::invalid_argument("tableau set is not strictly increasing: \"" + std::string(text) + "\"");
            }
        }
    }
    return SetValuedTableau(std::move(shape), k, std::move(rows));
}

std::string SetValuedTableau::to_string() const {
    std::string out;
    for (int i = 1; i <= shape_.rows(); ++i) {
        if (i > 1) {
            out += '/';
        }
        for (int j = 1; j <= shape_.part(i); ++j) {
            if (j > 1) {
                out += ',';
            }
            const EntrySet& set = at({i, j});
            if (set.size() == 1) {
                out += std::to_string(set.front());
                continue;
            }
            out += '{';
            for (std::size_t e = 0; e < set.size(); ++e) {
                if (e > 0) {
                    out += ',';
                }
                out += std::to_string(set[e]);
            }
            out += '}';
        }
    }
    return out;
}

std::size_t SetValuedTableau::index(Cell c) const {
    if (!shape_.contains(c)) {
        throw std::out_of_range("cell " + c.to_string() + " outside tableau shape");
    }
    return row_start_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1);
}

std::optional<std::string> SetValuedTableau::violation() const {
    for (int i = 1; i <= shape_.rows(); ++i) {
        for (int j = 1; j <= shape_.part(i); ++j) {
            const Cell c{i, j};
            const EntrySet& set = at(c);
            if (set.empty()) {
                return "empty set at " + c.to_string();
            }
            for (std::size_t e = 1; e < set.size(); ++e) {
                if (set[e - 1] >= set[e]) {
                    return "set at " + c.to_string() + " is not strictly increasing";
                }
            }
            if (set.front() < 1) {
                return "entry below 1 at " + c.to_string();
            }
            if (set.back() > k_ + i) {
                return "entry at " + c.to_string() + " exceeds flag " + std::to_string(k_ + i);
            }
            if (j > 1 && at({i, j - 1}).back() > set.front()) {
                return "row " + std::to_string(i) + " decreases at " + c.to_string();
            }
            if (i > 1 && at({i - 1, j}).back() >= set.front()) {
                return "column " + std::to_string(j) + " not strictly increasing at " + c.to_string();
            }
        }
    }
    return std::nullopt;
}

TableauKind classify(const SetValuedTableau& t) {
    int doubletons = 0;
    for (int i = 1; i <= t.shape().rows(); ++i) {
        for (int j = 1; j <= t.shape().part(i); ++j) {
            std::size_t n = t.at({i, j}).size();
            if (n == 2) {
                ++doubletons;
            } else if (n != 1) {
                return TableauKind::Other;
            }
        }
    }
    if (doubletons == 0) {
        return TableauKind::SSYT;
    }
    return doubletons == 1 ? TableauKind::BSSYT : TableauKind::Other;
}

std::string_view to_string(TableauKind kind) {
    switch (kind) {
        case TableauKind::SSYT: return "SSYT";
        case TableauKind::BSSYT: return "BSSYT";
        case TableauKind::Other: return "other";
    }
    return "other";
}

// ---- ReversePlanePartition ---------------------------------------------

ReversePlanePartition::ReversePlanePartition(Partition shape, int k)
    : shape_(std::move(shape)), k_(k), row_start_(row_starts(shape_)) {
    require_positive_k(k_);
    cells_.assign(static_cast<std::size_t>(shape_.size()), 0);
}

ReversePlanePartition::ReversePlanePartition(Partition shape, int k, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), k_(k), row_start_(row_starts(shape_)) {
    require_positive_k(k_);
    if (static_cast<int>(rows.size()) != shape_.rows()) {
        throw std::invalid_argument("plane partition row count does not match its shape");
    }
    for (int i = 1; i <= shape_.rows(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != shape_.part(i)) {
            throw std::invalid_argument("plane partition row " + std::to_string(i) + " does not match its shape");
        }
        cells_.insert(cells_.end(), row.begin(), row.end());
    }
}

ReversePlanePartition ReversePlanePartition::parse(std::string_view text, int k) {
    std::vector<std::vector<int>> rows;
    if (!text.empty()) {
        for (auto row : split(text, '/')) {
            std::vector<int> values;
            for (auto tok : split(row, ',')) {
                values.push_back(parse_int(tok, text));
            }
            rows.push_back(std::move(values));
        }
    }
    Partition shape = shape_of_rows(rows.size(), [&](std::size_t i) { return rows[i].size(); });
    return ReversePlanePartition(std::move(shape), k, std::move(rows));
}

std::string ReversePlanePartition::to_string() const {
    std::string out;
    for (int i = 1; i <= shape_.rows(); ++i) {
        if (i > 1) {
            out += '/';
        }
        for (int j = 1; j <= shape_.part(i); ++j) {
            if (j > 1) {
                out += ',';
            }
            out += std::to_string(at({i, j}));
        }
    }
    return out;
}

std::size_t ReversePlanePartition::index(Cell c) const {
    if (!shape_.contains(c)) {
        throw std::out_of_range("cell " + c.to_string() + " outside plane partition shape");
    }
    return row_start_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1);
}

std::optional<std::string> ReversePlanePartition::violation() const {
    for (int i = 1; i <= shape_.rows(); ++i) {
        for (int j = 1; j <= shape_.part(i); ++j) {
            const Cell c{i, j};
            const int v = at(c);
            if (v < 0 || v > k_) {
                return "entry at " + c.to_string() + " outside [0, " + std::to_string(k_) + "]";
            }
            if (j > 1 && at({i, j - 1}) > v) {
                return "row " + std::to_string(i) + " decreases at " + c.to_string();
            }
            if (i > 1 && at({i - 1, j}) > v) {
                return "column " + std::to_string(j) + " decreases at " + c.to_string();
            }
        }
    }
    return std::nullopt;
}

// ---- enumeration -------------------------------------------------------

void for_each_ssyt(const Partition& lambda, int k, const TableauVisitor& visit) {
    require_positive_k(k);
    Filler filler(lambda, 1, flag_bounds(lambda, k), true, -1);
    SetValuedTableau t(lambda, k);
    filler.run(
        [&] {
            std::size_t idx = 0;
            for (int i = 1; i <= lambda.rows(); ++i) {
                for (int j = 1; j <= lambda.part(i); ++j, ++idx) {
                    EntrySet& set = t.at({i, j});
                    set.resize(1);
                    set[0] = filler.lo()[idx];
                }
            }
            visit(t);
        },
        {});
}

void for_each_bssyt(const Partition& lambda, int k, const TableauVisitor& visit) {
    require_positive_k(k);
    SetValuedTableau t(lambda, k);
    const long cells = lambda.size();
    for (long wide = 0; wide < cells; ++wide) {
        Filler filler(lambda, 1, flag_bounds(lambda, k), true, wide);
        filler.run(
            [&] {
                std::size_t idx = 0;
                for (int i = 1; i <= lambda.rows(); ++i) {
                    for (int j = 1; j <= lambda.part(i); ++j, ++idx) {
                        EntrySet& set = t.at({i, j});
                        if (static_cast<long>(idx) == wide) {
                            set.resize(2);
                            set[0] = filler.lo()[idx];
                            set[1] = filler.hi()[idx];
                        } else {
                            set.resize(1);
                            set[0] = filler.lo()[idx];
                        }
                    }
                }
                visit(t);
            },
            {});
    }
}

void for_each_rpp(const Partition& lambda, int k, const RppVisitor& visit, RppShard shard) {
    require_positive_k(k);
    if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
        throw std::invalid_argument("invalid RPP shard");
    }
    if (lambda.empty()) {
        // The single empty filling belongs to shard 0.
        if (shard.index == 0) {
            visit(ReversePlanePartition(lambda, k));
        }
        return;
    }
    Filler filler(lambda, 0, std::vector<int>(static_cast<std::size_t>(lambda.rows()), k), false, -1);
    ReversePlanePartition p(lambda, k);
    filler.run(
        [&] {
            std::size_t idx = 0;
            for (int i = 1; i <= lambda.rows(); ++i) {
                for (int j = 1; j <= lambda.part(i); ++j, ++idx) {
                    p.at({i, j}) = filler.lo()[idx];
                }
            }
            visit(p);
        },
        shard);
}

std::vector<SetValuedTableau> enumerate_ssyt(const Partition& lambda, int k) {
    std::vector<SetValuedTableau> out;
    for_each_ssyt(lambda, k, [&](const SetValuedTableau& t) { out.push_back(t); });
    return out;
}

std::vector<SetValuedTableau> enumerate_bssyt(const Partition& lambda, int k) {
    std::vector<SetValuedTableau> out;
    for_each_bssyt(lambda, k, [&](const SetValuedTableau& t) { out.push_back(t); });
    return out;
}

std::vector<ReversePlanePartition> enumerate_rpp(const Partition& lambda, int k) {
    std::vector<ReversePlanePartition> out;
    for_each_rpp(lambda, k, [&](const ReversePlanePartition& p) { out.push_back(p); });
    return out;
}

std::uint64_t count_ssyt(const Partition& lambda, int k) {
    require_positive_k(k);
    std::uint64_t n = 0;
    Filler filler(lambda, 1, flag_bounds(lambda, k), true, -1);
    filler.run([&] { ++n; }, {});
    return n;
}

std::uint64_t count_bssyt(const Partition& lambda, int k) {
    require_positive_k(k);
    std::uint64_t n = 0;
    for (long wide = 0; wide < lambda.size(); ++wide) {
        Filler filler(lambda, 1, flag_bounds(lambda, k), true, wide);
        filler.run([&] { ++n; }, {});
    }
    return n;
}

std::uint64_t count_rpp(const Partition& lambda, int k) {
    require_positive_k(k);
    std::uint64_t n = 0;
    Filler filler(lambda, 0, std::vector<int>(static_cast<std::size_t>(lambda.rows()), k), false, -1);
    filler.run([&] { ++n; }, {});
    return n;
}

// ---- row shift ---------------------------------------------------------

SetValuedTableau rpp_to_ssyt(const ReversePlanePartition& p) {
    if (auto why = p.violation()) {
        throw std::invalid_argument("not a reverse plane partition: " + *why);
    }
    const Partition& shape = p.shape();
    SetValuedTableau t(shape, p.k());
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            t.at({i, j}) = {p.at({i, j}) + i};
        }
    }
    return t;
}

ReversePlanePartition ssyt_to_rpp(const SetValuedTableau& t) {
    if (classify(t) != TableauKind::SSYT) {
        throw std::invalid_argument("row shift needs single-valued squares");
    }
    const Partition& shape = t.shape();
    ReversePlanePartition p(shape, t.k());
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            const int v = t.at({i, j}).front() - i;
            if (v < 0) {
                throw std::invalid_argument("entry at " + Cell{i, j}.to_string() + " is below its row index");
            }
            p.at({i, j}) = v;
        }
    }
    if (auto why = p.violation()) {
        throw std::invalid_argument("row-shifted tableau is not a reverse plane partition: " + *why);
    }
    return p;
}

Partition induced_subshape(const ReversePlanePartition& p, int level) {
    if (level < 1 || level > p.k()) {
        throw std::invalid_argument("level " + std::to_string(level) + " outside [1, " + std::to_string(p.k()) + "]");
    }
    const Partition& shape = p.shape();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(shape.rows()));
    for (int i = 1; i <= shape.rows(); ++i) {
        int len = 0;
        while (len < shape.part(i) && p.at({i, len + 1}) < level) {
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

}  // namespace bstab
