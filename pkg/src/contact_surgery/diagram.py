"""Contact (+-1)-surgery diagrams and their homology.

A diagram is an ordered list of Legendrian components in (S^3, xi_st),
each with its Thurston-Bennequin invariant, rotation number and contact
surgery sign, together with the pairwise linking numbers.  Only this
numerical shadow of a front projection is modelled.

Components are numbered from 1 in the docstrings (matching the figures'
bottom-to-top numbering) but stored 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd, lcm, prod
from typing import Iterable, Mapping

from .errors import DimensionError, UnsupportedManifoldError
from .exact_linalg import IntMatrix, det, smith_normal_form, solve


@dataclass(frozen=True)
class LegendrianComponent:
    tb: int
    rot: int
    sign: int = -1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"contact surgery sign must be +1 or -1, got {self.sign}")

    @property
    def coefficient(self) -> int:
        """Integral (topological) surgery coefficient tb + sign."""
        return self.tb + self.sign


def _normalize_links(n: int, links: Mapping[tuple[int, int], int] | Iterable) -> dict[tuple[int, int], int]:
    items = links.items() if isinstance(links, Mapping) else links
    out: dict[tuple[int, int], int] = {}
    for (i, j), v in items:
        if i == j:
            raise ValueError("self-linking is not stored; use tb")
        if not (0 <= i < n and 0 <= j < n):
            raise DimensionError(f"link ({i}, {j}) out of range for {n} components")
        key = (min(i, j), max(i, j))
        if key in out and out[key] != v:
            raise ValueError(f"conflicting linking numbers for pair {key}")
        if v:
            out[key] = int(v)
    return out


@dataclass(frozen=True)
class ContactSurgeryDiagram:
    """Ordered Legendrian link with contact surgery signs.

    ``links`` maps 0-based pairs ``(i, j)`` with ``i < j`` to non-zero
    linking numbers; missing pairs are unlinked.
    """

    components: tuple[LegendrianComponent, ...] = ()
    links: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "links", _normalize_links(len(self.components), self.links))

    def __hash__(self):
        return hash((self.components, tuple(sorted(self.links.items()))))

    @property
    def n(self) -> int:
        return len(self.components)

    def lk(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("lk(L_i, L_i) is undefined in a linking matrix")
        return self.links.get((min(i, j), max(i, j)), 0)

    @property
    def rot_vector(self) -> list[int]:
        return [c.rot for c in self.components]

    @property
    def plus_count(self) -> int:
        """Number of contact (+1)-surgery components."""
        return sum(1 for c in self.components if c.sign == 1)


@dataclass(frozen=True)
class MarkedDiagram:
    """A surgery diagram plus a single Legendrian knot L0 disjoint from it."""

    diagram: ContactSurgeryDiagram
    tb0: int
    rot0: int
    lk0: tuple[int, ...] = ()

    def __post_init__(self):
        lk0 = tuple(int(x) for x in self.lk0)
        if not lk0 and self.diagram.n:
            lk0 = (0,) * self.diagram.n
        if len(lk0) != self.diagram.n:
            raise DimensionError(f"lk0 has length {len(lk0)}, diagram has {self.diagram.n} components")
        object.__setattr__(self, "lk0", lk0)


@dataclass(frozen=True)
class HomologyReport:
    h1_invariant_factors: tuple[int, ...]
    is_qhs: bool
    order_r: int | None = None

    @property
    def h1_order(self) -> int | None:
        """|H_1(Y)|, or None when H_1 is infinite."""
        return prod(self.h1_invariant_factors) if self.is_qhs else None


def linking_matrix(d: ContactSurgeryDiagram) -> IntMatrix:
    n = d.n
    return IntMatrix(
        [[d.components[i].coefficient if i == j else d.lk(i, j) for j in range(n)] for i in range(n)],
        ncols=n,
    )


def extended_matrix(m: MarkedDiagram) -> IntMatrix:
    """Linking matrix of L0 + L with lk(L0, L0) := 0 in the corner."""
    mat = linking_matrix(m.diagram)
    n = m.diagram.n
    rows = [[0, *m.lk0]]
    for i in range(n):
        rows.append([m.lk0[i], *mat.row(i)])
    return IntMatrix(rows, ncols=n + 1)


def h1_invariant_factors(mat: IntMatrix) -> tuple[int, ...]:
    """Torsion coefficients (> 1) and free summands (0) of coker(mat)."""
    return tuple(d for d in smith_normal_form(mat).diagonal if d != 1)


def knot_order(mat: IntMatrix, lk0) -> int:
    """Order of sum lk0[j] * mu_j in coker(mat), read off the Smith form.

    With ``U mat V = D``, ``r * lk0`` lies in the column space of ``mat``
    iff ``d_i | r * (U lk0)_i`` for every i.
    """
    snf = smith_normal_form(mat)
    if any(d == 0 for d in snf.diagonal) or mat.rows != mat.cols:
        raise UnsupportedManifoldError("order of L0 is only defined in a rational homology sphere")
    c = snf.left.apply(list(lk0))
    r = 1
    for d, ci in zip(snf.diagonal, c):
        r = lcm(r, d // gcd(d, ci))
    return r


def knot_order_bruteforce(mat: IntMatrix, lk0) -> int:
    """Smallest r in 1..|det| with mat^{-1}(r lk0) integral.  Test oracle."""
    dm = det(mat)
    if dm == 0:
        raise UnsupportedManifoldError("order of L0 is only defined in a rational homology sphere")
    x = solve(mat, list(lk0)) if mat.rows else []
    for r in range(1, abs(dm) + 1):
        if all((r * xi).denominator == 1 for xi in x):
            return r
    raise AssertionError("unreachable: |det M| annihilates H_1")


def homology(m: MarkedDiagram | ContactSurgeryDiagram) -> HomologyReport:
    """H_1 of the surgered manifold and, for a marked diagram, the order of [L0]."""
    d = m.diagram if isinstance(m, MarkedDiagram) else m
    mat = linking_matrix(d)
    factors = h1_invariant_factors(mat)
    qhs = 0 not in factors
    r = None
    if qhs and isinstance(m, MarkedDiagram):
        r = knot_order(mat, m.lk0)
    return HomologyReport(factors, qhs, r)


def order_r(m: MarkedDiagram) -> int:
    rep = homology(m)
    if not rep.is_qhs:
        raise UnsupportedManifoldError("surgered manifold is not a rational homology sphere")
    return rep.order_r


def reverse_orientation(m: MarkedDiagram) -> MarkedDiagram:
    """Reverse L0: rot0 and all lk(L0, L_i) change sign, tb0 does not."""
    return replace(m, rot0=-m.rot0, lk0=tuple(-x for x in m.lk0))


def stabilize(c, positive: bool):
    """One stabilisation of a component or of the marked knot.

    tb drops by one, rot moves by +1 (positive) or -1 (negative).
    """
    step = 1 if positive else -1
    if isinstance(c, LegendrianComponent):
        return replace(c, tb=c.tb - 1, rot=c.rot + step)
    if isinstance(c, MarkedDiagram):
        return replace(c, tb0=c.tb0 - 1, rot0=c.rot0 + step)
    raise TypeError(f"cannot stabilise {type(c).__name__}")
