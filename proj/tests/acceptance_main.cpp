#include "handleforge/acceptance.hpp"

int main() { return hf::print_acceptance(hf::run_acceptance()); }
