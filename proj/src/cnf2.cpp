#include "pmax/cnf2.hpp"
