#include <cstdio>
#include <string>
#include <vector>

#include "cca/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cca::cli::CliResult result = cca::cli::run_cli(args);
    std::fputs(result.out.c_str(), result.exit_code == 0 ? stdout : stderr);
    return result.exit_code;
}
