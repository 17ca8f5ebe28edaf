#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evidfuse {

// Recompute one embedded golden table and emit a cell-by-cell CSV diff
// (columns: table,row,cell,actual,expected,tolerance,status). Returns 0 when
// every checked cell is within tolerance, 1 otherwise. The EVIDFUSE_TOLERANCE
// environment variable overrides all cell tolerances.
int run_reproduce(const std::string& id, std::ostream& out);

const std::vector<std::string>& reproduce_ids();

}  // namespace evidfuse
