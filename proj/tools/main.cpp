#include "weinstein/cli.hpp"

int main(int argc, char** argv) { return weinstein::run_command(argc, argv); }
