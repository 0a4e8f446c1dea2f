#include <iostream>

int main() {
    std::cout << "hyperalg: CLI not wired yet\n";
    return 1;
}
