#include "fss/report.hpp"
int main() { return 0; }
