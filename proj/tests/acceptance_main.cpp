#include <iostream>

#include "qsnake/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    return qsnake::run_acceptance(std::cout, only) ? 0 : 1;
}
