#pragma once

#include "polymux/constructions.hpp"
#include "polymux/document.hpp"
#include "polymux/errors.hpp"
#include "polymux/face_lattice.hpp"
#include "polymux/formulas.hpp"
#include "polymux/graphs.hpp"
#include "polymux/matrix_rank.hpp"
#include "polymux/poset_iso.hpp"
#include "polymux/toric.hpp"
#include "polymux/verify.hpp"
#include "polymux/vertex_set.hpp"
