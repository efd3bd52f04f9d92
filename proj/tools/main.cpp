#include <string>
#include <vector>

#include "compactcubic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return compactcubic::run_cli(args);
}
