#include "pmax/selftest.hpp"
