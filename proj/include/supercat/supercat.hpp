#pragma once

#include <supercat/congruences.hpp>
#include <supercat/exact.hpp>
#include <supercat/identities.hpp>
#include <supercat/modular.hpp>
#include <supercat/record.hpp>
#include <supercat/report.hpp>
