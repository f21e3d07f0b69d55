# Copyright 2024 The cnatlib authors.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Golden values shipped with the package.

Each ``*.txt`` file starts with ``#`` lines describing where its values come
from, one of which is ``# columns: ...``; the rest are whitespace-separated integers.
"""
import os
from typing import Dict, List, NamedTuple, Tuple

import numpy as np

FIXTURE_DIR = os.path.dirname(os.path.abspath(__file__))


class Fixture(NamedTuple):
    """A loaded fixture file."""

    name: str
    provenance: Tuple[str, ...]
    columns: Tuple[str, ...]
    rows: List[Dict[str, int]]


def load(name):
    """Loads ``<name>.txt`` from the fixture directory.

    Args:
        name (str): file name without extension

    Returns:
        Fixture: the header and the rows keyed by column name
    """
    path = os.path.join(FIXTURE_DIR, name + ".txt")
    with open(path, encoding="utf-8") as f:
        header = [line[1:].strip() for line in f if line.startswith("#")]

    columns = next((h.split(":", 1)[1].split() for h in header if h.startswith("columns:")), None)
    if columns is None:
        raise ValueError(f"Fixture {name} has no '# columns:' line.")

    data = np.loadtxt(path, dtype=np.int64, comments="#", ndmin=2)
    rows = [dict(zip(columns, (int(x) for x in row))) for row in data]
    provenance = tuple(h for h in header if not h.startswith("columns:"))
    return Fixture(name, provenance, tuple(columns), rows)


def data_table():
    """``{n: (T, A, B)}`` for ``1 <= n <= 8``."""
    return {r["n"]: (r["T"], r["A"], r["B"]) for r in load("data_table").rows}


def b_table():
    """``{n: {k: b}}`` for ``2 <= n <= 8``."""
    out = {}
    for r in load("b_table").rows:
        out.setdefault(r["n"], {})[r["k"]] = r["b"]
    return out


def binomial_transform_targets():
    """``{k: [c_0, c_1, ...]}`` for the transformed columns."""
    out = {}
    for r in sorted(load("binomial_transform").rows, key=lambda r: (r["k"], r["m"])):
        out.setdefault(r["k"], []).append(r["c"])
    return out
