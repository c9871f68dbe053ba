#include <cstdio>

int main() {
    std::puts("fpplab: experiment subcommands arrive with the harness module");
    return 0;
}
