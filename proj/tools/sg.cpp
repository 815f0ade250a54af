#include "sg_cli.hpp"

int main(int argc, char** argv) { return sg::cli::run(argc, argv, std::cout, std::cerr); }
