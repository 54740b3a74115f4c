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

#ifndef FOOTPRINT_DATA_H_
#define FOOTPRINT_DATA_H_

#include <string_view>

// Shipped data files compiled into the library.
namespace footprint::data {

std::string_view default_stoplist();
std::string_view demo_taxonomy();
std::string_view default_public_suffix_list();
std::string_view example_ad_config();

}  // namespace footprint::data

#endif  // FOOTPRINT_DATA_H_
