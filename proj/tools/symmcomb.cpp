#include "symmcomb/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return symmcomb::cli_main(argc, argv, std::cout, std::cerr);
}
