#include "pmax/vcmatch.hpp"
