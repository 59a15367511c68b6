#pragma once

#include "splinereg/error.hpp"
#include "splinereg/rational.hpp"
#include "splinereg/linalg.hpp"
#include "splinereg/monomial.hpp"
#include "splinereg/powers_forms.hpp"
#include "splinereg/syzygy.hpp"
#include "splinereg/complex.hpp"
#include "splinereg/complex_io.hpp"
#include "splinereg/regularity.hpp"
#include "splinereg/report.hpp"
