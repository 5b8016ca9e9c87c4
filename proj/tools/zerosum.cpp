// CLI entry point; subcommands are wired up in stages as the library grows.
#include <cstdio>

#include "zerosum/abelian.hpp"

int main() {
  std::puts("zerosum: not yet wired");
  return 0;
}
