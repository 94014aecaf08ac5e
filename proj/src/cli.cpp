#include "pmax/cli.hpp"
