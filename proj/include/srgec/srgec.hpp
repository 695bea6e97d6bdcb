#pragma once

#include "srgec/certificate.hpp"
#include "srgec/error.hpp"
#include "srgec/factorizer.hpp"
#include "srgec/families.hpp"
#include "srgec/graph.hpp"
#include "srgec/graph6.hpp"
#include "srgec/matching.hpp"
#include "srgec/pipeline.hpp"
#include "srgec/rng.hpp"
#include "srgec/spectra.hpp"
