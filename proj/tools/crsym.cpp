#include "crsym/cli.hpp"

int main(int argc, char** argv) { return crsym::cli_main(argc, argv); }
