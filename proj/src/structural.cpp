#include "pmax/structural.hpp"
