#pragma once

namespace dsharp::cli {

// Entry point for the dsharp command-line tool. Returns 0 iff the report
// was fully written.
int run(int argc, const char* const* argv);

}  // namespace dsharp::cli
