#include "coreborder/cli.hpp"

int main(int argc, char** argv) {
    return coreborder::cli::run(argc, argv);
}
