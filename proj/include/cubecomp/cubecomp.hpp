#ifndef CUBECOMP_CUBECOMP_HPP
#define CUBECOMP_CUBECOMP_HPP

#include "arith.hpp"
#include "parallel.hpp"
#include "bqf.hpp"
#include "cube.hpp"
#include "altpair.hpp"
#include "localcount.hpp"
#include "zeta.hpp"

#endif // CUBECOMP_CUBECOMP_HPP
