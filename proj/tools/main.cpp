#include "cli.hpp"

int main(int argc, char** argv) { return modknot::cli::run(argc, argv); }
