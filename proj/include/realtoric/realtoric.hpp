#pragma once

#include "combinatorics.hpp"
#include "rep_ring.hpp"
#include "exact_rank.hpp"
#include "poset_homology.hpp"
#include "cohomology.hpp"
#include "wonderful_model.hpp"
#include "cup_product.hpp"
#include "json_io.hpp"
