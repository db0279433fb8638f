/*
* Copyright (c) 2026 pospopcnt project contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*   http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing,
* software distributed under the License is distributed on an
* "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
* KIND, either express or implied.  See the License for the
* specific language governing permissions and limitations
* under the License.
*/
#pragma once

#include <cstdint>
#include <vector>

namespace testdata {

// Ten one-hot encoded country observations (LSB-first dictionary: USA=bit 0,
// Spain=1, Portugal=2, Japan=3, France=4, China=5, Canada=6, Australia=7):
// France, France, Portugal, France, USA, Portugal, USA, USA, USA, China.
// Histogram: bit0=4, bit2=2, bit4=3, bit5=1.
inline std::vector<std::uint16_t> country_stream() {
    return {0x0010, 0x0010, 0x0004, 0x0010, 0x0001,
            0x0004, 0x0001, 0x0001, 0x0001, 0x0020};
}

}  // namespace testdata
