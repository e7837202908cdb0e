#pragma once

// Everything except the JSON layer (report.hpp), which needs nlohmann/json.

#include "errors.hpp"
#include "subset.hpp"
#include "collection.hpp"
#include "necklace.hpp"
#include "regions.hpp"
#include "clique.hpp"
#include "purity.hpp"
#include "plabic.hpp"
#include "generalized.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "verify.hpp"
#include "conjectures.hpp"
