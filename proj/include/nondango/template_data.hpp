// Copyright 2026 The Nondango Authors
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

#ifndef NONDANGO_TEMPLATE_DATA_HPP
#define NONDANGO_TEMPLATE_DATA_HPP

#include <vector>

namespace nondango::detail {

// Contents of the data/templates/*.tmpl files, embedded at build time.
struct TemplateDatum {
    const char* file;
    const char* text;
};

const std::vector<TemplateDatum>& embedded_templates();

}  // namespace nondango::detail

#endif  // NONDANGO_TEMPLATE_DATA_HPP
