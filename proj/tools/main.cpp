#include "cli.hpp"

int main(int argc, char** argv) { return qcube::cli::run(argc, argv, std::cout, std::cerr); }
