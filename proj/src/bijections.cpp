#include "bstab/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace bstab {

namespace {

void require_bssyt(const SetValuedTableau& t) {
    if (auto why = t.violation()) {
        throw std::invalid_argument("invalid tableau: " + *why);
    }
    if (classify(t) != TableauKind::BSSYT) {
        throw std::invalid_argument("tableau is not barely set-valued");
    }
}

void require_rpp(const ReversePlanePartition& p, int level) {
    if (auto why = p.violation()) {
        throw std::invalid_argument("invalid reverse plane partition: " + *why);
    }
    if (level < 1 || level > p.k()) {
        throw std::invalid_argument("level " + std::to_string(level) + " outside [1, " + std::to_string(p.k()) + "]");
    }
}

// T with every entry of row t lowered by t, except the doubleton square,
// which receives `keep` (already lowered).
ReversePlanePartition shift_down(const SetValuedTableau& t, Cell doubleton, int keep) {
    const Partition& shape = t.shape();
    ReversePlanePartition p(shape, t.k());
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            p.at({i, j}) = t.at({i, j}).front() - i;
        }
    }
    p.at(doubleton) = keep;
    return p;
}

// Joins `extra` into square `c` of p and raises every row t by t.
SetValuedTableau shift_up_with(const ReversePlanePartition& p, Cell c, int extra) {
    const Partition& shape = p.shape();
    SetValuedTableau t(shape, p.k());
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            t.at({i, j}) = {p.at({i, j}) + i};
        }
    }
    EntrySet& set = t.at(c);
    int a = std::min(p.at(c), extra) + c.row;
    int b = std::max(p.at(c), extra) + c.row;
    if (a == b) {
        throw std::invalid_argument("inserted value duplicates the entry at " + c.to_string());
    }
    set = {a, b};
    if (auto why = t.violation()) {
        throw std::invalid_argument("reconstructed tableau is invalid: " + *why);
    }
    return t;
}

}  // namespace

Cell doubleton_cell(const SetValuedTableau& t) {
    require_bssyt(t);
    const Partition& shape = t.shape();
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            if (t.at({i, j}).size() == 2) {
                return {i, j};
            }
        }
    }
    throw std::logic_error("BSSYT without a doubleton square");
}

CornerTriple bssyt_to_corner(const SetValuedTableau& t) {
    const Cell b_cell = doubleton_cell(t);
    const EntrySet& set = t.at(b_cell);
    const int r = b_cell.row;
    return {shift_down(t, b_cell, set[0] - r), set[1] - r, b_cell};
}

SetValuedTableau corner_to_bssyt(const CornerTriple& triple) {
    require_rpp(triple.rpp, triple.level);
    const Partition alpha = induced_subshape(triple.rpp, triple.level);
    const auto cs = corners(alpha);
    if (std::find(cs.begin(), cs.end(), triple.corner) == cs.end()) {
        throw std::invalid_argument(triple.corner.to_string() + " is not a corner of alpha(P, " +
                                    std::to_string(triple.level) + ") = (" + alpha.to_string() + ")");
    }
    return shift_up_with(triple.rpp, triple.corner, triple.level);
}

OutsideTriple bssyt_to_outside(const SetValuedTableau& t) {
    const Cell b_cell = doubleton_cell(t);
    const EntrySet& set = t.at(b_cell);
    const int r = b_cell.row;
    return {shift_down(t, b_cell, set[1] - r), set[0] - r + 1, b_cell};
}

SetValuedTableau outside_to_bssyt(const OutsideTriple& triple) {
    require_rpp(triple.rpp, triple.level);
    const Partition alpha = induced_subshape(triple.rpp, triple.level);
    const auto oc = proper_outside_corners(alpha, triple.rpp.shape());
    if (std::find(oc.begin(), oc.end(), triple.outside_corner) == oc.end()) {
        throw std::invalid_argument(triple.outside_corner.to_string() + " is not a proper outside corner of alpha(Q, " +
                                    std::to_string(triple.level) + ") = (" + alpha.to_string() + ")");
    }
    return shift_up_with(triple.rpp, triple.outside_corner, triple.level - 1);
}

void for_each_corner_triple(const Partition& lambda, int k, const std::function<void(const CornerTriple&)>& visit) {
    for_each_rpp(lambda, k, [&](const ReversePlanePartition& p) {
        for (int i = 1; i <= k; ++i) {
            for (Cell c : corners(induced_subshape(p, i))) {
                visit({p, i, c});
            }
        }
    });
}

void for_each_outside_triple(const Partition& lambda, int k, const std::function<void(const OutsideTriple&)>& visit) {
    for_each_rpp(lambda, k, [&](const ReversePlanePartition& p) {
        for (int j = 1; j <= k; ++j) {
            for (Cell c : proper_outside_corners(induced_subshape(p, j), lambda)) {
                visit({p, j, c});
            }
        }
    });
}

VerificationReport verify_roundtrip(const Partition& lambda, int k) {
    std::uint64_t total = 0;
    std::uint64_t survived = 0;
    for_each_bssyt(lambda, k, [&](const SetValuedTableau& t) {
        ++total;
        try {
            if (corner_to_bssyt(bssyt_to_corner(t)) == t && outside_to_bssyt(bssyt_to_outside(t)) == t) {
                ++survived;
            }
        } catch (const std::invalid_argument&) {
            // counted as a failed round trip
        }
    });
    VerificationReport report;
    report.claim = "roundtrip";
    report.params["shape"] = lambda.to_string();
    report.params["k"] = k;
    report.lhs = std::to_string(survived);
    report.rhs = std::to_string(total);
    report.equal = survived == total;

    // Opposite direction: every triple maps to a BSSYT and back.
    auto triple_report = [&](const char* claim, std::uint64_t kept, std::uint64_t seen) {
        VerificationReport r;
        r.claim = claim;
        r.params = report.params;
        r.lhs = std::to_string(kept);
        r.rhs = std::to_string(seen);
        r.equal = kept == seen && seen == total;
        r.note = "lhs: triples surviving the round trip; rhs: triples generated, expected |BSSYT| = " +
                 std::to_string(total);
        return r;
    };
    std::uint64_t seen = 0;
    std::uint64_t kept = 0;
    for_each_corner_triple(lambda, k, [&](const CornerTriple& c) {
        ++seen;
        try {
            kept += bssyt_to_corner(corner_to_bssyt(c)) == c;
        } catch (const std::invalid_argument&) {
        }
    });
    report.details.push_back(triple_report("roundtrip_corner_triples", kept, seen));
    seen = 0;
    kept = 0;
    for_each_outside_triple(lambda, k, [&](const OutsideTriple& o) {
        ++seen;
        try {
            kept += bssyt_to_outside(outside_to_bssyt(o)) == o;
        } catch (const std::invalid_argument&) {
        }
    });
    report.details.push_back(triple_report("roundtrip_outside_triples", kept, seen));
    return report;
}

}  // namespace bstab
