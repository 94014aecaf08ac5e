#include "pmax/dual2sat.hpp"
