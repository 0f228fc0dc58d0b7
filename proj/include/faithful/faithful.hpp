// Copyright 2026 The Faithful Authors
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

#include "faithful/config.hpp"
#include "faithful/corpus/audit.hpp"
#include "faithful/corpus/csv.hpp"
#include "faithful/corpus/inventory.hpp"
#include "faithful/corpus/testgen.hpp"
#include "faithful/corpus/wordlist.hpp"
#include "faithful/corpus/writers.hpp"
#include "faithful/emoji_catalog.hpp"
#include "faithful/error.hpp"
#include "faithful/normalizer.hpp"
#include "faithful/tokenizer.hpp"
#include "faithful/transliterator.hpp"
#include "faithful/unicode/codepoint.hpp"
#include "faithful/unicode/normalization.hpp"
#include "faithful/unicode/ucd.hpp"
#include "faithful/unicode/utf8.hpp"
#include "faithful/version.hpp"
