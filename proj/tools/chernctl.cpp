#include "chern/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const chern::CommandResult r = chern::execute(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << r.payload;
    std::cerr << r.error;
    return r.exit_code;
}
