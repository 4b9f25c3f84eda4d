#ifndef ARH1_REFERENCE_VALUES_HPP
#define ARH1_REFERENCE_VALUES_HPP

#include <string>
#include <vector>

namespace arh1 {

/// One published benchmark cell: table id, sample size, truncation
/// level, method label, metric label, and the printed value.  These are
/// the comparison targets attached to reproduction runs.
struct ReferenceRow {
  int table;
  long n;
  int k_n;
  const char* method;
  const char* metric;
  double value;
};

const std::vector<ReferenceRow>& reference_rows();
std::vector<ReferenceRow> reference_rows_for_table(int table);

/// Returns the published value for the cell, or a negative number when
/// the cell is absent.
double reference_value(int table, long n, const std::string& method,
                       const std::string& metric);

}  // namespace arh1

#endif
