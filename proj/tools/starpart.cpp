#include <cstdio>

int main() {
    std::puts("starpart: command-line interface not wired up yet");
    return 2;
}
