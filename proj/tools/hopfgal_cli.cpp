#include <cstdio>
int main() { std::puts("hopfgal cli placeholder"); return 0; }
