"""Built-in example systems with their expected degrees."""

from __future__ import annotations

from dataclasses import dataclass


def unit_square():
    return [(0, 0), (1, 0), (0, 1), (1, 1)]


def simplex(d: int, n: int = 2):
    """Vertices of d times the standard simplex (d may be negative)."""
    return [tuple([0] * n)] + [tuple(d * (k == j) for k in range(n)) for j in range(n)]


def dense_triangle(d: int):
    return [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]


def trinomials(p: int, q: int, r: int):
    return [
        [(1, 0, 0), (0, p, 0), (0, 0, p)],
        [(q, 0, 0), (0, 1, 0), (0, 0, q)],
        [(r, 0, 0), (0, r, 0), (0, 0, 1)],
    ]


def pure_powers(ds):
    n = len(ds)
    return [simplex(d, n) for d in ds]


def trinomial_formula(p, q, r):
    return (
        2 * p * q * r + q * q * r + q * r * r - q - r - 1 - p * min(q, r),
        2 * p * q * r + p * p * r + p * r * r - p - r - 1 - q * min(r, p),
        2 * p * q * r + p * p * q + p * q * q - p - q - 1 - r * min(p, q),
    )


def pure_power_formula(ds):
    n = len(ds)
    out = []
    for i in range(n):
        prod = 1
        for j, d in enumerate(ds):
            if j != i:
                prod *= d
        out.append(prod * (ds[i] - n * ds[0] + sum(ds[1:])))
    return tuple(out)


QUADRILATERAL = [(0, 0), (1, 3), (-1, 2), (0, 1), (0, 2)]


@dataclass(frozen=True)
class Example:
    name: str
    configs: list
    cycle: tuple  # expected cycle degree
    lattice_index: int = 1
    defective: bool = False
    source: str = ""
    note: str = ""

    @property
    def reduced(self):
        return tuple(x // self.lattice_index for x in self.cycle) if self.lattice_index else self.cycle


CORPUS: dict[str, Example] = {
    e.name: e
    for e in [
        Example(
            "univariate-quadrics",
            [[(0, 0), (1, 0), (2, 0)], [(0, 0), (0, 1), (0, 2)]],
            (0, 0),
            defective=True,
            source="two quadrics in separate variables",
        ),
        Example("hyperdet-2x2x2", [unit_square(), unit_square()], (2, 2), source="2x2x2 hyperdeterminant"),
        Example("tact-2-2", [dense_triangle(2), dense_triangle(2)], (6, 6), source="dense tact invariant"),
        Example("tact-2-3", [dense_triangle(2), dense_triangle(3)], (12, 10), source="dense tact invariant"),
        Example("sparse-coprime-2-3", [simplex(2), simplex(3)], (3, 4), source="sparse triangles, coprime"),
        Example("sparse-opposite-1-1", [simplex(1), simplex(-1)], (2, 2), source="opposite triangles"),
        Example(
            "sparse-opposite-2-2",
            [simplex(2), simplex(-2)],
            (8, 8),
            lattice_index=4,
            source="opposite triangles, index g^2",
        ),
        Example("square-quadrilateral", [unit_square(), QUADRILATERAL], (12, 8), source="square and quadrilateral"),
        Example(
            "square-quadrilateral-minus",
            [unit_square(), [p for p in QUADRILATERAL if p != (0, 1)]],
            (12, 7),
            source="same, with (0,1) removed",
        ),
        Example("strata-positive-3-2", [simplex(3), simplex(2)], (4, 3), source="sparse triangles d1>=d2>=0"),
        Example("strata-positive-5-2", [simplex(5), simplex(2)], (12, 15), source="sparse triangles d1>=d2>=0"),
        Example("strata-mixed-3-2", [simplex(3), simplex(-2)], (10, 15), source="sparse triangles d1>=0>=d2"),
        Example(
            "trinomial-2-2-2",
            trinomials(2, 2, 2),
            trinomial_formula(2, 2, 2),
            source="three trinomials, piecewise formula",
            note="ray shooting and an independent elimination count both give (12, 12, 12)",
        ),
        Example(
            "trinomial-2-3-4",
            trinomials(2, 3, 4),
            trinomial_formula(2, 3, 4),
            source="three trinomials, piecewise formula",
            note="ray shooting gives (78, 58, 46); elimination confirms 78 in the first block",
        ),
        Example(
            "trinomial-3-4-5",
            trinomials(3, 4, 5),
            trinomial_formula(3, 4, 5),
            source="three trinomials, piecewise formula",
            note="ray shooting gives (188, 153, 129)",
        ),
        Example("pure-power-1-2-3", pure_powers((1, 2, 3)), (18, 12, 10), source="pure powers, n=3"),
        Example("pure-power-2-3-5", pure_powers((2, 3, 5)), (60, 50, 42), source="pure powers, n=3"),
    ]
}
