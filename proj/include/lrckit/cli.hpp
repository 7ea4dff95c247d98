#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrckit::cli {

/// Batch front end. Subcommands: bound, encode, repair, retrieve, simulate,
/// verify, flowgraph. Exit codes: 0 success, 1 usage, 2 verification
/// failure, 3 I/O. Randomized subcommands take --seed and print identical
/// bytes for identical seeds and flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrckit::cli
