#ifndef PS2GD_PS2GD_HPP
#define PS2GD_PS2GD_HPP

#include "ps2gd/constraint_set.hpp"
#include "ps2gd/data_io.hpp"
#include "ps2gd/dataset.hpp"
#include "ps2gd/errors.hpp"
#include "ps2gd/objective.hpp"
#include "ps2gd/oracles.hpp"
#include "ps2gd/random_source.hpp"
#include "ps2gd/sampling.hpp"
#include "ps2gd/solvers.hpp"
#include "ps2gd/sparse_matrix.hpp"
#include "ps2gd/theory.hpp"
#include "ps2gd/trace.hpp"
#include "ps2gd/vector_ops.hpp"

#endif  // PS2GD_PS2GD_HPP
