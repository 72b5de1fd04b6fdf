#ifndef NERON_JUMPS_HPP
#define NERON_JUMPS_HPP

#include "neron_jumps/integer.hpp"
#include "neron_jumps/dual_graph.hpp"
#include "neron_jumps/graph_io.hpp"
#include "neron_jumps/hj_resolution.hpp"
#include "neron_jumps/character_poly.hpp"
#include "neron_jumps/traces.hpp"
#include "neron_jumps/cyclotomic.hpp"
#include "neron_jumps/chain_oracle.hpp"
#include "neron_jumps/jumps.hpp"
#include "neron_jumps/catalog.hpp"

#endif // NERON_JUMPS_HPP
