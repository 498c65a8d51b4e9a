#pragma once

#include "vercat/exactlin/algorithms.hpp"
#include "vercat/exactlin/field.hpp"
#include "vercat/exactlin/matrix.hpp"
