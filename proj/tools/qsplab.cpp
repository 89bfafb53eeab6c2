// command-line front end; wired up as the library grows
#include <cstdio>

int main() {
  std::puts("qsplab: no verbs wired yet");
  return 2;
}
