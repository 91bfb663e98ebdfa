#include <string>
#include <vector>

#include "convshock/scenarios_io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return convshock::cli_main(args);
}
