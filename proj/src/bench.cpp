#include "pmax/bench.hpp"
