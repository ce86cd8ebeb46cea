#include "otg/cli.hpp"

int main(int argc, char** argv) { return otg::cli::run(argc, argv); }
