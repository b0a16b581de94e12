#pragma once

#include "brik/access.hpp"
#include "brik/bigint.hpp"
#include "brik/blocks.hpp"
#include "brik/density.hpp"
#include "brik/error.hpp"
#include "brik/factors.hpp"
#include "brik/options.hpp"
#include "brik/runs.hpp"
#include "brik/structure.hpp"
#include "brik/word.hpp"
