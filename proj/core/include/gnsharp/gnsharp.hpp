#pragma once

#include "gnsharp/constants.hpp"
#include "gnsharp/extremizer.hpp"
#include "gnsharp/grid_io.hpp"
#include "gnsharp/quadrature.hpp"
#include "gnsharp/special_functions.hpp"
#include "gnsharp/spectral.hpp"
#include "gnsharp/verifier.hpp"
#include "gnsharp/version.hpp"
