// Copyright 2026 The dpasim Authors
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

#pragma once

#include <functional>
#include <string>

namespace dpa {

// Non-fatal diagnostics (truncation tails, validity monitors). The default
// handler prints to stderr; the experiment runner installs one that also
// records messages into the run manifest.
void warn(const std::string& message);
void set_warning_handler(std::function<void(const std::string&)> handler);
void reset_warning_handler();

}  // namespace dpa
