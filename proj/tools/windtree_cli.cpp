#include <cstdio>

int main() {
    std::printf("windtree cli placeholder\n");
    return 0;
}
