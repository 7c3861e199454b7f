#pragma once

#include "peakset/bijections.hpp"
#include "peakset/closed_forms.hpp"
#include "peakset/count.hpp"
#include "peakset/format.hpp"
#include "peakset/mirrored.hpp"
#include "peakset/oracle.hpp"
#include "peakset/peak_partitions.hpp"
#include "peakset/peak_polynomials.hpp"
#include "peakset/permutation.hpp"
#include "peakset/verify.hpp"
