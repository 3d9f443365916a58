#include "spingeo/cli_app.hpp"

int main(int argc, char** argv) { return spingeo::run_cli(argc, argv); }
