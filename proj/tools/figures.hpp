// Copyright 2026 the darkcell authors
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

#ifndef DARKCELL_TOOLS_FIGURES_HPP
#define DARKCELL_TOOLS_FIGURES_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace dctool {

std::vector<std::string> figure_ids();

// Runs one bundled study (fig2 ... fig11): emits data files plus a
// pass/fail report under outdir. Returns true when every check passed.
bool run_figure(const std::string& id, const std::filesystem::path& outdir,
                unsigned workers);

}  // namespace dctool

#endif  // DARKCELL_TOOLS_FIGURES_HPP
