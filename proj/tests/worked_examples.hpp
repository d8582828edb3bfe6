//  Copyright 2026 The argagg Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Small frameworks whose labelings have known pairwise disagreement values.

#ifndef ARGAGG_TESTS_WORKED_EXAMPLES_HPP_
#define ARGAGG_TESTS_WORKED_EXAMPLES_HPP_

#include "argagg/argagg.hpp"

namespace worked {

using argagg::ArgumentationFramework;
using argagg::Labeling;

/// Four complete labelings: everything decided, A-B undecided, C-E
/// undecided, everything undecided.
struct HammingExample {
  ArgumentationFramework af{{"A", "B", "C", "D", "E"},
                            {{"A", "B"}, {"B", "A"}, {"B", "B"},
                             {"C", "D"}, {"D", "C"}, {"D", "D"}, {"D", "E"}}};
  Labeling l1 = af.labeling({"A", "C", "E"}, {"B", "D"});
  Labeling l2 = af.labeling({"C", "E"}, {"D"});
  Labeling l3 = af.labeling({"A"}, {"B"});
  Labeling l4 = Labeling::all_undec(5);
};

/// Issues {A,B,C,D}, {E,F}, {G,H}.
struct IssueExample {
  ArgumentationFramework af{{"A", "B", "C", "D", "E", "F", "G", "H"},
                            {{"A", "B"}, {"B", "A"}, {"B", "C"}, {"C", "D"},
                             {"E", "F"}, {"F", "E"}, {"G", "H"}, {"H", "G"}}};
  Labeling l1 = af.labeling({"A", "C", "E", "G"}, {"B", "D", "F", "H"});
  Labeling l2 = af.labeling({"A", "C", "F", "H"}, {"B", "D", "E", "G"});
  Labeling l3 = af.labeling({"B", "D", "E", "G"}, {"A", "C", "F", "H"});
};

/// A single issue {A,B}: opposite decisions versus abstention.
struct IuoExample {
  ArgumentationFramework af{{"A", "B"}, {{"A", "B"}, {"B", "A"}}};
  Labeling l1 = af.labeling({"A"}, {"B"});
  Labeling l2 = af.labeling({"B"}, {"A"});
  Labeling l3 = Labeling::all_undec(2);
};

}  // namespace worked

#endif  // ARGAGG_TESTS_WORKED_EXAMPLES_HPP_
