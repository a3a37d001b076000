// Copyright 2026 The dwf Authors
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

#include "dwf/tolerance.hpp"

#include <cstdlib>
#include <string>

namespace dwf {

const Tolerances &tolerances() {
    static const Tolerances instance = [] {
        Tolerances t;
        if (const char *env = std::getenv("DWF_TOLERANCE_SCALE")) {
            try {
                double s = std::stod(env);
                if (s > 0) {
                    t.scale = s;
                }
            } catch (const std::exception &) {
                // Unparseable values fall back to 1.0.
            }
        }
        return t;
    }();
    return instance;
}

}  // namespace dwf
