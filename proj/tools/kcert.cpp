#include "kcert/cli.hpp"

int main(int argc, char** argv) { return kcert::run(argc, argv); }
