#pragma once

#include "coadj/rational.hpp"
#include "coadj/rootsys.hpp"
#include "coadj/linalg.hpp"
#include "coadj/liealg.hpp"
#include "coadj/polynomial.hpp"
#include "coadj/orbits.hpp"
#include "coadj/basic.hpp"
#include "coadj/io.hpp"
#include "coadj/oracle.hpp"
