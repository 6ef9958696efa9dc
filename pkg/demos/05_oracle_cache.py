r"""
Caching ground truth on disk
============================

Oracle tables can be written to a compact binary file and reloaded, which
saves rebuilding the n=7 table (645,120 states) between runs.
"""

import tempfile
from pathlib import Path

import numpy as np

from burntpancake import OracleTable, build_oracle, parse_permutation

table = build_oracle(6)
path = Path(tempfile.mkdtemp()) / "signed6.bin"
table.dump(path)
print(f"wrote {path.stat().st_size} bytes")

again = OracleTable.load(path)
assert np.array_equal(again.distances, table.distances)
print("distance of <-6 -5 -4 -3 -2 -1>:", again.distance(parse_permutation("-6 -5 -4 -3 -2 -1")))
print("diameter:", again.max_distance)
