#!/usr/bin/env python3
# Copyright 2026 The EnCoD Authors.
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
"""Regenerates the ONMI fixture covers and their golden values.

The values come from cdlib's `onmi` (variants "MGH" and "MGH_LFK"), which
its authors checked against McDaid's Overlapping-NMI tool. Run with cdlib
0.4.1 installed:

    python3 make_onmi_golden.py tests/data/onmi
"""
import random
import sys
from pathlib import Path

from cdlib.evaluation.internal.onmi import onmi as reference

N = 50
PAIRS = 5


def random_cover(rng, n):
    communities = []
    for _ in range(rng.randint(3, 7)):
        size = rng.randint(4, 18)
        communities.append(set(rng.sample(range(n), size)))
    covered = set().union(*communities)
    for v in range(n):
        if v not in covered:
            rng.choice(communities).add(v)
    return communities


def perturb(rng, cover, n):
    out = []
    for c in cover:
        c = set(c)
        for v in rng.sample(range(n), rng.randint(1, 8)):
            if v in c and len(c) > 2:
                c.discard(v)
            else:
                c.add(v)
        out.append(c)
    if rng.random() < 0.5:
        out.append(set(rng.sample(range(n), rng.randint(3, 10))))
    covered = set().union(*out)
    for v in range(n):
        if v not in covered:
            rng.choice(out).add(v)
    return out


def write_cover(path, cover):
    path.write_text("".join(" ".join(map(str, sorted(c))) + "\n" for c in cover))


def main():
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20260411)
    nodes = set(range(N))
    lines = ["# pair onmi_max onmi_lfk\n"]
    for i in range(PAIRS):
        a = random_cover(rng, N)
        b = perturb(rng, a, N) if i % 2 == 0 else random_cover(rng, N)
        write_cover(out / f"pair{i}_a.txt", a)
        write_cover(out / f"pair{i}_b.txt", b)
        mgh = reference(a, b, nodes, variant="MGH")
        lfk = reference(a, b, nodes, variant="MGH_LFK")
        lines.append(f"{i} {float(mgh)!r} {float(lfk)!r}\n")
    (out / "golden.txt").write_text("".join(lines))


if __name__ == "__main__":
    main()
