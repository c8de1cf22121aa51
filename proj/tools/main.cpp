#include "farey_sl2/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    farey::cli::Options opts;
    const char* env = std::getenv("FAREY_SL2_COLOR");
    opts.color = isatty(STDOUT_FILENO) && !(env && std::strcmp(env, "0") == 0);
    std::vector<std::string> args(argv + 1, argv + argc);
    return farey::cli::run(args, std::cout, std::cerr, opts);
}
