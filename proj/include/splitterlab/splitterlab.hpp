#pragma once

#include "splitterlab/zmod.hpp"
#include "splitterlab/search.hpp"
#include "splitterlab/factorization.hpp"
#include "splitterlab/splitting.hpp"
#include "splitterlab/logarithms.hpp"
#include "splitterlab/characters.hpp"
#include "splitterlab/structure_m15.hpp"
#include "splitterlab/codec.hpp"
#include "splitterlab/json_io.hpp"
