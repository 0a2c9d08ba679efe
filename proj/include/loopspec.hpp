#pragma once

#include "loopspec/graph.hpp"
#include "loopspec/edge_list.hpp"
#include "loopspec/matrix.hpp"
#include "loopspec/laplacian.hpp"
#include "loopspec/lifting.hpp"
#include "loopspec/eigen.hpp"
#include "loopspec/spectral.hpp"
#include "loopspec/oracle.hpp"
#include "loopspec/sweep.hpp"
#include "loopspec/report.hpp"
