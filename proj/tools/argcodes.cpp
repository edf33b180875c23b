#include "arg/cli.hpp"

int main(int argc, char** argv) { return arg::cli_main(argc, argv); }
