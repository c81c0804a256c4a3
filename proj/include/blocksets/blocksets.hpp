#ifndef BLOCKSETS_BLOCKSETS_HPP
#define BLOCKSETS_BLOCKSETS_HPP

#include "blocksets/error.hpp"
#include "blocksets/words.hpp"
#include "blocksets/blockset.hpp"
#include "blocksets/point.hpp"
#include "blocksets/colouring.hpp"
#include "blocksets/parallel.hpp"
#include "blocksets/search.hpp"
#include "blocksets/lattice.hpp"
#include "blocksets/json_io.hpp"
#include "blocksets/spec_parse.hpp"

#endif  // BLOCKSETS_BLOCKSETS_HPP
