// Copyright 2026 The TopTalk Authors
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

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "toptalk/model.hpp"

namespace toptalk {

/// fig1: N = 4, n = 1, pi_j = 1/5, v_j = j, price 3/2.
/// n2: N = 2, v = (0, 1, 2), pi = (1/3, 1/3, 1/3) unless overridden by --pi, price 1.
std::map<std::string, GameSpec> builtin_examples();

/// Entry point behind the toptalk binary. `args` excludes the program name.
/// Returns 0 on success, 2 on bad input or an invalid spec, 1 when an
/// internal consistency check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toptalk
