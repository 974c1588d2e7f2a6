// Umbrella header.

#ifndef NUMGAME_NUMGAME_HPP_
#define NUMGAME_NUMGAME_HPP_

#include "common.hpp"
#include "egcm.hpp"
#include "families.hpp"
#include "game.hpp"
#include "words.hpp"
#include "roots.hpp"
#include "adjacency.hpp"

#endif
