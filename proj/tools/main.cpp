#include "gapforge/cli.hpp"

int main(int argc, char** argv)
{
    return gapforge::cli_main(argc, argv);
}
