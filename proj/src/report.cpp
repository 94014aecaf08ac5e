#include "pmax/report.hpp"
