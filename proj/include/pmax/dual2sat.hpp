#pragma once

#include "pmax/common.hpp"
