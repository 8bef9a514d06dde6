// Shared doctest runner. Positional arguments (no leading dash) are captured
// into hvtest::args before doctest parses the rest, so ctest can hand a test
// the path of the hv binary.
#pragma once

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>
#include <vector>

namespace hvtest {
inline std::vector<std::string> args;
}

int main(int argc, char** argv) {
  std::vector<char*> pass;
  pass.push_back(argv[0]);
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] == '-')
      pass.push_back(argv[i]);
    else
      hvtest::args.push_back(argv[i]);
  }
  doctest::Context ctx(static_cast<int>(pass.size()), pass.data());
  return ctx.run();
}
