#include "suval_cli/app.hpp"

int main(int argc, char** argv) { return suval::cli::run(argc, argv); }
