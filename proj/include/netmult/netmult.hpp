#pragma once

#include "netmult/error.hpp"
#include "netmult/network.hpp"
#include "netmult/exact.hpp"
#include "netmult/random.hpp"
#include "netmult/admissible.hpp"
#include "netmult/multipliers.hpp"
#include "netmult/spectral.hpp"
#include "netmult/io.hpp"
