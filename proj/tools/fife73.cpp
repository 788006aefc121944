#include <fife/cli.hpp>

int main(int argc, char** argv) { return fife::cli::run_main(argc, argv); }
