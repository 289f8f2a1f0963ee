#pragma once

// Umbrella header for the whole library.

#include "thompson/core.hpp"
#include "thompson/farey.hpp"
#include "thompson/psl2z.hpp"
#include "thompson/tree_pair.hpp"
#include "thompson/circle_map.hpp"
#include "thompson/thin.hpp"
#include "thompson/sequence.hpp"
#include "thompson/harness.hpp"
