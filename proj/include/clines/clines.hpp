#pragma once

#include "clines/errors.hpp"
#include "clines/field.hpp"
#include "clines/monomial.hpp"
#include "clines/polynomial.hpp"
#include "clines/parse.hpp"
#include "clines/groebner.hpp"
#include "clines/hilbert.hpp"
#include "clines/radical.hpp"
#include "clines/linalg.hpp"
#include "clines/contact.hpp"
#include "clines/points.hpp"
#include "clines/fano.hpp"
#include "clines/examples.hpp"
