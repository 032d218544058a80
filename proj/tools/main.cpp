#include "sbe/cli.hpp"

int main(int argc, char** argv) {
    return sbe::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
