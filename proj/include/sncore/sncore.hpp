#pragma once

#include "bounds.hpp"
#include "census.hpp"
#include "characters.hpp"
#include "column_cache.hpp"
#include "cores.hpp"
#include "padic.hpp"
#include "partitions.hpp"
#include "types.hpp"
