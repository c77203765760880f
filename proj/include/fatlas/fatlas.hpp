#pragma once

#include "fatlas/coloring.hpp"
#include "fatlas/errors.hpp"
#include "fatlas/graph.hpp"
#include "fatlas/graph_io.hpp"
#include "fatlas/json.hpp"
#include "fatlas/lift.hpp"
#include "fatlas/linalg.hpp"
#include "fatlas/multipartite.hpp"
#include "fatlas/random.hpp"
#include "fatlas/rational.hpp"
#include "fatlas/search.hpp"
#include "fatlas/spectral.hpp"
#include "fatlas/verify.hpp"
