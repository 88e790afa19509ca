#pragma once

#include "lahbell/degenerate_exp.hpp"
#include "lahbell/distributions.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/estimation.hpp"
#include "lahbell/factorials.hpp"
#include "lahbell/families.hpp"
#include "lahbell/moments.hpp"
#include "lahbell/polynomial.hpp"
#include "lahbell/rational.hpp"
#include "lahbell/sampling.hpp"
#include "lahbell/triangles.hpp"
#include "lahbell/value.hpp"
#include "lahbell/verify.hpp"
