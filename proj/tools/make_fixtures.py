#!/usr/bin/env python3
# Copyright 2026 The modterw Authors
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

"""Writes the fixture corpus into fixtures/ and tests/data/.

The cyclic, Hamming and thin fixtures are also reproducible with
`modterw gen`; the tests compare the two.
"""

import itertools
import pathlib
import sys


def write(path, table, comment):
    n = len(table)
    lines = [f"# {c}" for c in comment]
    lines.append(str(n))
    lines += [" ".join(str(v) for v in row) for row in table]
    path.write_text("\n".join(lines) + "\n")


def cyclic(n):
    return [[min((y - x) % n, (x - y) % n) for y in range(n)] for x in range(n)]


def hamming(length, q):
    words = list(itertools.product(range(q), repeat=length))
    return [[sum(a != b for a, b in zip(u, v)) for v in words] for u in words]


def thin(elements, op, inv):
    # r(x, y) is the index of x^{-1} y.
    index = {g: i for i, g in enumerate(elements)}
    return [[index[op(inv(x), y)] for y in elements] for x in elements]


def wreath12():
    # Points 4a + 2b + c with a in Z_3 and b, c in Z_2. The relation of
    # (x, y) depends on the difference (da, db, dc) only.
    def rel(x, y):
        da = (y // 4 - x // 4) % 3
        db = ((y // 2) % 2) ^ ((x // 2) % 2)
        dc = (y % 2) ^ (x % 2)
        if da == 0:
            return 0 if (db, dc) == (0, 0) else (1 if db == 0 else 2)
        return 3 if da == 1 else 4

    return [[rel(x, y) for y in range(12)] for x in range(12)]


def petersen():
    pts = list(itertools.combinations(range(5), 2))
    return [[0 if u == v else (1 if not set(u) & set(v) else 2) for v in pts]
            for u in pts]


def main(root):
    fx = root / "fixtures"
    fx.mkdir(exist_ok=True)
    write(fx / "one-point.scheme", [[0]], ["one-point scheme"])
    for n in range(3, 9):
        write(fx / f"z{n}.scheme", cyclic(n),
              [f"cyclic scheme on Z_{n}: r(x,y) = min(y-x, x-y) mod {n}"])
    for length, q in [(2, 2), (2, 3), (3, 2)]:
        write(fx / f"hamming-{length}-{q}.scheme", hamming(length, q),
              [f"Hamming scheme H({length},{q}), lexicographic words"])
    z = lambda m: (list(range(m)), lambda a, b: (a + b) % m, lambda a: (-a) % m)
    for m in (2, 3):
        write(fx / f"thin-z{m}.scheme", thin(*z(m)),
              [f"thin scheme of Z_{m}"])
    klein = [(0, 0), (0, 1), (1, 0), (1, 1)]
    write(fx / "thin-klein.scheme",
          thin(klein, lambda a, b: (a[0] ^ b[0], a[1] ^ b[1]), lambda a: a),
          ["thin scheme of Z_2 x Z_2"])
    write(fx / "as12-21.scheme", wreath12(),
          ["order 12, d = 4, k = (1,1,2,4,4), 3' = 4",
           "point 4a+2b+c, a in Z_3, b,c in Z_2; relation of the difference:",
           "(0,0,0)->0 (0,0,1)->1 (0,1,*)->2 (1,*,*)->3 (2,*,*)->4",
           "see fixtures/README.md for provenance"])
    write(fx / "petersen.scheme", petersen(),
          ["Johnson scheme J(5,2); relation 1 is the Petersen graph"])

    data = root / "tests" / "data"
    data.mkdir(parents=True, exist_ok=True)
    broken = cyclic(5)
    broken[0][1] = broken[1][0] = 2
    broken[0][2] = broken[2][0] = 1
    write(data / "broken.scheme", broken,
          ["Z_5 table with two symmetric entries swapped; not a scheme"])


if __name__ == "__main__":
    main(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else
                      pathlib.Path(__file__).resolve().parent.parent))
