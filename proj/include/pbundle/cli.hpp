#pragma once

#include <iosfwd>

namespace pbundle {

/* Commands: classify | cohomology | homology | validate | surface | sphere |
 * oracle | catalog. Exit status: 0 success, 1 domain errors (invalid
 * complexes, hypothesis violations, ...), 2 usage errors. Testable entry
 * point; main() is a thin wrapper. */
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pbundle
