#include "commands.hpp"

int main(int argc, char** argv) { return racktwist::cli::run(argc, argv); }
