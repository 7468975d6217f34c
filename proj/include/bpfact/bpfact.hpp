#pragma once

#include "bpfact/borders.hpp"
#include "bpfact/counting.hpp"
#include "bpfact/exact.hpp"
#include "bpfact/extremal.hpp"
#include "bpfact/factorization.hpp"
#include "bpfact/limits.hpp"
#include "bpfact/oracle.hpp"
#include "bpfact/word.hpp"
