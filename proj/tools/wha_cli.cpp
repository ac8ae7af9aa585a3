#include <cstdio>

int main() {
    std::puts("wha: placeholder");
    return 0;
}
