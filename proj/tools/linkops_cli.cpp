// placeholder; the command-line front end is built after the library layers
#include <cstdio>

int main() {
    std::puts("linkops: not yet wired");
    return 0;
}
