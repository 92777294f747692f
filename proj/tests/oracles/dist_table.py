# Copyright 2026 The negaffect Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Critical values from standard statistical tables (reproduced with scipy)."""
from scipy import stats
for p, df in [(0.9,10),(0.95,1),(0.95,5),(0.95,10),(0.95,30),(0.975,1),(0.975,2),(0.975,5),(0.975,10),(0.975,20),(0.975,30),(0.99,10),(0.995,10),(0.995,30)]:
    print(f"{{{stats.t.ppf(p,df):.6f}, {df}, {p}}},")
print()
for p, d1, d2 in [(0.95,1,10),(0.95,2,10),(0.95,5,20),(0.99,3,30),(0.95,1,30),(0.99,1,10),(0.95,4,60),(0.99,6,120),(0.9,2,20),(0.95,14,1997),(0.999,6,1991),(0.95,10,10)]:
    print(f"{{{stats.f.ppf(p,d1,d2):.6f}, {d1}, {d2}, {p}}},")
