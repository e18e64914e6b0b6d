// Whole tables of Severi degrees up to a given curve degree.
//
// Every child of a key in either recursion has a smaller degree, or the same
// degree and a smaller weight(beta). Grouping keys into levels ordered by
// (d, weight(beta)) therefore lets all keys of one level be evaluated
// independently once the earlier levels are stored.
#pragma once

#include "severi/recursion.hpp"

#include <vector>

namespace severi {

/// Every valid key of degree d with delta in [0, max delta] (max_nodes(d) for
/// the total count, p_a(d) when `irreducible`), sorted.
std::vector<SeveriKey> all_keys(int d, bool irreducible = false);

/// Reference build: the memoized recursion run key by key, single thread.
void build_table_serial(int max_d, bool irreducible, CountTable& table);

/// Level-by-level build; the keys of each level are evaluated with OpenMP.
/// Fills the same entries as build_table_serial.
void build_table_parallel(int max_d, bool irreducible, CountTable& table);

}  // namespace severi
