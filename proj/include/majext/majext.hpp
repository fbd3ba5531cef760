#pragma once

#include "majext/bounds.hpp"
#include "majext/degree_sequences.hpp"
#include "majext/errors.hpp"
#include "majext/extremal_solver.hpp"
#include "majext/graph.hpp"
#include "majext/indices.hpp"
#include "majext/majorization.hpp"
#include "majext/rational.hpp"
#include "majext/report.hpp"
#include "majext/verification.hpp"
