#pragma once

#include "qcomb/bpoly.hpp"
#include "qcomb/ffmatrix.hpp"
#include "qcomb/partition.hpp"
#include "qcomb/profiles.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/set_partition.hpp"
#include "qcomb/stirling_rook.hpp"
#include "qcomb/tableau.hpp"
#include "qcomb/verify.hpp"
