#include "framelab/cli.hpp"

int main(int argc, char** argv) {
  return framelab::run_cli(argc, argv);
}
