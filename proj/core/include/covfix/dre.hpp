#pragma once

#include <utility>
#include <vector>

#include "covfix/instance.hpp"

namespace covfix {

/// Rows whose support is a superset of another row's support (the dominated
/// rows): covering the smaller-support row covers them for free. Of two rows
/// with identical support the higher index is reported.
std::vector<int> dominated_rows(const ScpInstance& inst);

/// All rows covered by exactly one column, as (row, forced column) pairs,
/// deduplicated by column.
std::vector<std::pair<int, int>> singleton_rows(const ScpInstance& inst);

/// Alternates dominated-row deletion and singleton-row forcing until neither
/// changes the instance. Columns fixed to one remove every row they cover and
/// contribute to the cost offset. Columns left covering no surviving row stay
/// in the instance; callers fix them to zero in final accounting.
ReducedInstance dre_fixpoint(const ScpInstance& inst);

}  // namespace covfix
