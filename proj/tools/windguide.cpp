#include "windguide/cli.hpp"

int main(int argc, char** argv) { return windguide::cli_main(argc, argv); }
