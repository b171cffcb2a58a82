#pragma once
// Umbrella header for the full pipeline library.

#include "sandpipe/core/answers.hpp"
#include "sandpipe/core/ids.hpp"
#include "sandpipe/core/types.hpp"
#include "sandpipe/errors.hpp"
#include "sandpipe/filtering/consistency.hpp"
#include "sandpipe/filtering/decontam.hpp"
#include "sandpipe/filtering/dedup.hpp"
#include "sandpipe/filtering/difficulty.hpp"
#include "sandpipe/filtering/novelty.hpp"
#include "sandpipe/generation/generate.hpp"
#include "sandpipe/generation/hike.hpp"
#include "sandpipe/generation/prompts.hpp"
#include "sandpipe/generation/tags.hpp"
#include "sandpipe/generation/taxonomy.hpp"
#include "sandpipe/pipeline/config.hpp"
#include "sandpipe/pipeline/export.hpp"
#include "sandpipe/pipeline/manifest.hpp"
#include "sandpipe/pipeline/providers.hpp"
#include "sandpipe/pipeline/report.hpp"
#include "sandpipe/pipeline/serialization.hpp"
#include "sandpipe/pipeline/stages.hpp"
#include "sandpipe/providers/http.hpp"
#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/providers/mock.hpp"
#include "sandpipe/providers/types.hpp"
#include "sandpipe/providers/vector_math.hpp"
#include "sandpipe/providers/wire.hpp"
