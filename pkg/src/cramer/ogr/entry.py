"""Entry charts U_m11 and U_m21 of the omega-less Cr(2,4,2).

On U_m11 the free coordinates are m11..m14, m21 and rows 2..4 of N; the first
row of N comes from row 1 of MN = 0 and m22, m23, m24 from the minors M_{1k}.
U_m21 swaps the roles of the two rows of M.
"""

from __future__ import annotations

from functools import lru_cache

from cramer.charts.chart import ChartMap, SolvedCoordinate
from cramer.errors import ParameterError
from cramer.poly.matrix import MinorCache, PolyMatrix
from cramer.poly.multipoly import MultiPoly
from cramer.poly.table import Var, m, n
from cramer.types import OmegaMode
from cramer.variety.ideal import complement, generate_ideal, minor_sign

R, S, T = 2, 2, 4
ORIENTATION = {0: 1, 1: -1}


def entry_chart(row: int) -> ChartMap:
    """Chart on m_{row+1, 1} != 0 (row is 0 or 1)."""
    if row not in (0, 1):
        raise ParameterError(f"row must be 0 or 1, got {row}")
    other = 1 - row
    ideal = generate_ideal(R, S, OmegaMode.OMEGA_LESS)
    table = ideal.table
    M = PolyMatrix.symbolic_m(table)
    N = PolyMatrix.symbolic_n(table)
    n_minors = MinorCache(N.transpose())
    pivot = M[row, 0]

    solved: dict[Var, SolvedCoordinate] = {}
    for b in range(S):
        acc = MultiPoly.zero(table)
        for k in range(1, T):
            acc = acc - M[row, k] * N[k, b]
        solved[n(0, b)] = SolvedCoordinate(acc)

    for k in range(1, T):
        subset = (0, k)
        n_rest = n_minors.minor(range(S), complement(subset, T)).scale(minor_sign(subset))
        # M_{1k} = m11 m2k - m1k m21 = sign * N_{T^c}
        if row == 0:
            numerator = n_rest + M[0, k] * M[1, 0]
        else:
            numerator = M[0, 0] * M[1, k] - n_rest
        solved[m(other, k)] = SolvedCoordinate(numerator)

    free = tuple(v for v in table if v not in solved)
    return ChartMap(
        name=f"U_m{row + 1}1",
        ideal=ideal,
        free=free,
        solved=solved,
        pivot=pivot,
        sigma_power=3,
        orientation=ORIENTATION[row],
    )


@lru_cache(maxsize=2)
def entry_charts() -> tuple[ChartMap, ChartMap]:
    return entry_chart(0), entry_chart(1)
