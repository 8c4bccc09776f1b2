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

#include "dpa/layout.hpp"

#include <sstream>

namespace dpa {

long long SpaceLayout::dim_before(int slot) const {
  factor(slot);  // range check
  long long d = 1;
  for (int i = 0; i < slot; ++i) d *= factors_[static_cast<size_t>(i)].dim();
  return d;
}

long long SpaceLayout::dim_after(int slot) const {
  factor(slot);
  long long d = 1;
  for (int i = slot + 1; i < num_factors(); ++i) d *= factors_[static_cast<size_t>(i)].dim();
  return d;
}

int SpaceLayout::find(Factor::Kind kind) const {
  for (int i = 0; i < num_factors(); ++i)
    if (factors_[static_cast<size_t>(i)].kind == kind) return i;
  return -1;
}

std::string SpaceLayout::describe() const {
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " (x) ";
    if (factors_[i].kind == Factor::Kind::Boson)
      os << "Boson(cutoff=" << factors_[i].param << ")";
    else
      os << "Spin(N=" << factors_[i].param << ")";
  }
  os << " [dim " << total_dim() << "]";
  return os.str();
}

}  // namespace dpa
