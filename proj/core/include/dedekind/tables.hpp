#ifndef DEDEKIND_TABLES_HPP
#define DEDEKIND_TABLES_HPP

#include <cstdint>

#include "dedekind/bigint.hpp"
#include "dedekind/errors.hpp"

namespace dedekind::tables {

/// Known Dedekind numbers D(0)..D(9). D(9) is the 2023 value; it is used
/// here only as reference data for residue regression checks.
inline BigInt dedekind_number(int n) {
    switch (n) {
    case 0: return BigInt(2);
    case 1: return BigInt(3);
    case 2: return BigInt(6);
    case 3: return BigInt(20);
    case 4: return BigInt(168);
    case 5: return BigInt(7581);
    case 6: return BigInt(7828354);
    case 7: return BigInt("2414682040998");
    case 8: return BigInt("56130437228687557907788");
    case 9: return BigInt("286386577668298411128469151667598498812366");
    default:
        throw capability_error("dedekind_number: no reference value for D(" +
                               std::to_string(n) + ")");
    }
}

/// Known counts R(0)..R(8) of equivalence classes of monotone Boolean
/// functions under permutation of the base set.
inline BigInt equivalence_class_count(int n) {
    switch (n) {
    case 0: return BigInt(2);
    case 1: return BigInt(3);
    case 2: return BigInt(5);
    case 3: return BigInt(10);
    case 4: return BigInt(30);
    case 5: return BigInt(210);
    case 6: return BigInt(16353);
    case 7: return BigInt("490013148");
    case 8: return BigInt("1392195548889993358");
    default:
        throw capability_error("equivalence_class_count: no reference value for R(" +
                               std::to_string(n) + ")");
    }
}

} // namespace dedekind::tables

#endif // DEDEKIND_TABLES_HPP
