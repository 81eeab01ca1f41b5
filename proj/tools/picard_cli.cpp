#include "picard/cli_app.hpp"

int main(int argc, char** argv) { return picard::run_cli(argc, argv); }
