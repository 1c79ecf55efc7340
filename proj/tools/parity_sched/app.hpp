#pragma once

#include <iosfwd>

namespace parity::cli {

struct Streams {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
  bool color = false;
};

/// Entry point shared by main() and the tests. Returns the process exit
/// code: 0 on success, 1 on input/library errors, 2 on usage errors, 3 when
/// a bound check failed.
int run(int argc, const char *const *argv, Streams io);

} // namespace parity::cli
