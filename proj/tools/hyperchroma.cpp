#include <string>
#include <vector>

#include "hyperchroma/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hyperchroma::cli::run(std::move(args));
}
