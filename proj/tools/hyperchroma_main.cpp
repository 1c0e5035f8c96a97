#include <iostream>

#include "hyperchroma/cli/commands.hpp"

int main(int argc, char** argv)
{
    return hyperchroma::cli::run(argc, argv, std::cout, std::cerr);
}
