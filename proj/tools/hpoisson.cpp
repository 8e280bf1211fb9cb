#include <cstdio>
int main(){ std::puts("hpoisson"); return 0; }
