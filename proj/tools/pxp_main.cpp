#include <iostream>

#include "pxp/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pxp::CliResult result = pxp::run_cli(args);
    if (result.exit_code == 0)
        std::cout << result.output;
    else
        std::cerr << result.output;
    return result.exit_code;
}
