#pragma once

#include <cstdint>
#include <functional>

#include "bstab/report.hpp"
#include "bstab/tableaux.hpp"

namespace bstab {

/// (P, i, C) with C a corner of alpha(P, i).
struct CornerTriple {
    ReversePlanePartition rpp;
    int level;
    Cell corner;

    friend bool operator==(const CornerTriple&, const CornerTriple&) = default;
};

/// (Q, j, C') with C' a proper outside corner of alpha(Q, j).
struct OutsideTriple {
    ReversePlanePartition rpp;
    int level;
    Cell outside_corner;

    friend bool operator==(const OutsideTriple&, const OutsideTriple&) = default;
};

/// Row-shifts T down and drops the larger value b of the doubleton square B
/// (row r); the level is b - r and the corner is B.
CornerTriple bssyt_to_corner(const SetValuedTableau& t);

/// Puts the level back into the designated corner and row-shifts up.
SetValuedTableau corner_to_bssyt(const CornerTriple& triple);

/// Row-shifts T down and drops the smaller value a of the doubleton square B
/// (row r); the level is a - r + 1 and the outside corner is B.
OutsideTriple bssyt_to_outside(const SetValuedTableau& t);

/// Puts level - 1 back into the designated outside corner and row-shifts up.
SetValuedTableau outside_to_bssyt(const OutsideTriple& triple);

/// Locates the unique doubleton square; throws unless t is a valid BSSYT.
Cell doubleton_cell(const SetValuedTableau& t);

/// Every valid triple of each kind for (lambda, k), generated from RPPs and
/// levels without going through tableaux.
void for_each_corner_triple(const Partition& lambda, int k, const std::function<void(const CornerTriple&)>& visit);
void for_each_outside_triple(const Partition& lambda, int k, const std::function<void(const OutsideTriple&)>& visit);

/// Sends every T in BSSYT(lambda, k) through both bijections and back.
/// lhs counts the tableaux that survive both round trips, rhs is |BSSYT|.
/// Details repeat the check from the triple side for each bijection.
VerificationReport verify_roundtrip(const Partition& lambda, int k);

}  // namespace bstab
