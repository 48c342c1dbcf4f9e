// Acceptance suite: runs every criterion and prints one PASS/FAIL line per
// criterion; exits nonzero on any failure.

#include <iostream>

#include "phecke/verify.hpp"

int main() { return phecke::run_verification(std::cout) ? 0 : 1; }
