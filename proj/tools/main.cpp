#include <vector>

#include "qep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qep::cli::run_command(args).exit_code;
}
