// Copyright 2026 The sepdist Authors
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

#ifndef SEPDIST_CLI_APP_HPP
#define SEPDIST_CLI_APP_HPP

#include <iosfwd>

namespace sepdist::cli {

// Exit codes: 0 success, 2 parse error, 3 invariant violation,
// 4 incompatible inputs, 5 verification failure.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sepdist::cli

#endif  // SEPDIST_CLI_APP_HPP
