// Copyright 2026 The footprint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FOOTPRINT_FOOTPRINT_H_
#define FOOTPRINT_FOOTPRINT_H_

#include "footprint/ad_extractor.h"
#include "footprint/errors.h"
#include "footprint/event_log.h"
#include "footprint/event_model.h"
#include "footprint/extraction.h"
#include "footprint/fetch.h"
#include "footprint/har.h"
#include "footprint/metrics.h"
#include "footprint/profile.h"
#include "footprint/public_suffix.h"
#include "footprint/rake.h"
#include "footprint/series_io.h"
#include "footprint/simulator.h"
#include "footprint/taxonomy.h"
#include "footprint/time.h"

#endif  // FOOTPRINT_FOOTPRINT_H_
