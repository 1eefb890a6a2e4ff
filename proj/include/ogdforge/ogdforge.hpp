#pragma once

#include "circuit.hpp"
#include "circuit_io.hpp"
#include "compiler.hpp"
#include "emitters.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "fastforward.hpp"
#include "gadget.hpp"
#include "gadget_tables.hpp"
#include "ogd.hpp"
#include "program_io.hpp"
#include "rational.hpp"
#include "sparse_vec.hpp"
#include "trace.hpp"
#include "verify.hpp"
