// vlcris - indoor visible-light link simulator with a mirror-array reflector
// and a liquid-crystal receiver front end
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef vlcris_config_H
#define vlcris_config_H

#include <stdexcept>
#include <string>

#include "vlcris/scenario.hpp"

namespace vlcris
{

// Configuration rejection: unreadable file, malformed JSON, unknown key, or
// an invariant violation. Maps to CLI exit code 1.
class config_error : public std::invalid_argument
{
  public:
    explicit config_error(const std::string &message) : std::invalid_argument(message) {}
};

// Parse a JSON scenario description. Unknown keys are rejected at every
// nesting level; unset fields keep their defaults; an empty document (or
// whitespace/empty object) yields the pure-defaults configuration. The
// result is fully validated.
scenario_config parse_config(const std::string &json_text);

// parse_config over the contents of `path`.
scenario_config load_config(const std::string &path);

} // namespace vlcris

#endif
