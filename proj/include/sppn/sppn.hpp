#pragma once

#include "sppn/angle.hpp"
#include "sppn/bell.hpp"
#include "sppn/charge.hpp"
#include "sppn/closed_form.hpp"
#include "sppn/field.hpp"
#include "sppn/oracle.hpp"
#include "sppn/special_cases.hpp"
#include "sppn/superposition.hpp"
#include "sppn/verification.hpp"
