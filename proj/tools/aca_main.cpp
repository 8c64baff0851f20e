#include <cstdio>

int main() {
    std::puts("aca: placeholder");
    return 0;
}
