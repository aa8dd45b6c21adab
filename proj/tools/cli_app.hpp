// Copyright 2026 The spdsim Authors
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

#ifndef SPD_TOOLS_CLI_APP_HPP_
#define SPD_TOOLS_CLI_APP_HPP_

namespace spd::cli {

/// Exit codes: 0 success, 1 verify tolerance failure, 2 configuration
/// error, 3 runtime contract violation.
int main(int argc, char** argv);

}  // namespace spd::cli

#endif  // SPD_TOOLS_CLI_APP_HPP_
