r"""
Simplification does not preserve flip distance
==============================================

``<2 1>`` is not simple; its usual simple counterpart is ``<3 2 1>``. The
exact distances differ, so sorting the simple counterpart only gives an upper
bound for the original.
"""

from burntpancake import build_oracle, distance_report, parse_permutation

for text in ("2 1", "3 2 1"):
    pi = parse_permutation(text)
    exact = build_oracle(pi.n).distance(pi)
    rep = distance_report(pi)
    print(f"<{pi}>: exact {exact}, lower bound {rep.lower_bound}, simple={rep.simple}, "
          f"formula {rep.formula_value}")
