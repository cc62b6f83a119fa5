#include <iostream>
int main() { std::cout << "qsnake placeholder\n"; return 0; }
