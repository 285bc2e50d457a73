// Thin executable wrapper over the library's command-line driver.

#include "boson/cli.hpp"

int main(int argc, char** argv) { return boson::run(argc, argv); }
