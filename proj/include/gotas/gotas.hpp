#pragma once

#include "gotas/universe.hpp"
#include "gotas/topology.hpp"
#include "gotas/order.hpp"
#include "gotas/approximations.hpp"
#include "gotas/oracle.hpp"
#include "gotas/random.hpp"
#include "gotas/document.hpp"
