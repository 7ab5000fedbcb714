#pragma once

#include "modinv/gf.hpp"
#include "modinv/group.hpp"
#include "modinv/hilbert.hpp"
#include "modinv/invariants.hpp"
#include "modinv/io.hpp"
#include "modinv/linalg.hpp"
#include "modinv/poly.hpp"
#include "modinv/ringcalc.hpp"
