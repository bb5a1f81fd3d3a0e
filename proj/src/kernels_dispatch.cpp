// Copyright 2026 The jaws Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <cstring>

#include "jaws/kernels.hpp"

namespace jaws::kernels {

const Table *avx2_table();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

} // namespace

const Table *avx2() {
    static const Table *t = cpu_has_avx2() ? avx2_table() : nullptr;
    return t;
}

const Table &active() {
    static const Table *t = [] {
        const char *env = std::getenv("JAWS_KERNELS");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) {
            return &scalar();
        }
        const Table *v = avx2();
        return v != nullptr ? v : &scalar();
    }();
    return *t;
}

} // namespace jaws::kernels
