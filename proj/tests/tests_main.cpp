#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "xte/util.hpp"

int main(int argc, char** argv) {
  xte::set_log_enabled(false);  // keep expected warnings out of the test output
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
