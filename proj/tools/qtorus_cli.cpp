#include <iostream>

#include "qtorus/report.hpp"

int main(int argc, char** argv) { return qtorus::run_command(argc, argv, std::cout, std::cerr); }
