#pragma once

#include "epp/bigint.hpp"
#include "epp/bounds.hpp"
#include "epp/certificate.hpp"
#include "epp/certify.hpp"
#include "epp/engine.hpp"
#include "epp/gadgets.hpp"
#include "epp/graph.hpp"
#include "epp/instance.hpp"
#include "epp/menger.hpp"
#include "epp/oracle.hpp"
#include "epp/path_spec.hpp"
#include "epp/reductions.hpp"
