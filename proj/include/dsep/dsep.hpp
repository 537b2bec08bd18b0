#pragma once

#include "dsep/dseparation.hpp"
#include "dsep/graph.hpp"
#include "dsep/min_separator.hpp"
#include "dsep/net_format.hpp"
#include "dsep/oracle.hpp"
#include "dsep/vertex_cut.hpp"
