// Umbrella header.
#pragma once

#include "sg/balance.hpp"
#include "sg/connectivity.hpp"
#include "sg/core.hpp"
#include "sg/decide.hpp"
#include "sg/gadgets.hpp"
#include "sg/gen.hpp"
#include "sg/io.hpp"
#include "sg/oracle.hpp"
#include "sg/verdict.hpp"
#include "sg/verify.hpp"
