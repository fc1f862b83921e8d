#include "dct3mg_cli/cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return dct3mg_cli::run_cli(argc, argv, std::cout, std::cerr);
}
