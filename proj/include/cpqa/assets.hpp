// Copyright 2026 The CPQA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CPQA_ASSETS_HPP_
#define CPQA_ASSETS_HPP_

#include <string_view>

// Prompt assets compiled in from assets/templates/.
namespace cpqa::assets {

std::string_view qa_generation();
std::string_view pqa_star_omit();
std::string_view instruction1();
std::string_view instruction2();

}  // namespace cpqa::assets

#endif  // CPQA_ASSETS_HPP_
