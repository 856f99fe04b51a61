"""Rational classical invariants and the d3 invariant from a surgery diagram.

For a knot L0 in the complement of a contact (+-1)-surgery link with
linking matrix M (diagonal tb_i + sign_i) and extended matrix M0:

    tb_Q(L0)  = tb0 + det M0 / det M
    rot_Q(L0) = rot0 - <rot, M^{-1} lk0>

and for the surgered contact structure (torsion c_1, tb != 0 on every
(+1)-component):

    d3 = (c^2 - 3 sigma - 2 chi) / 4 + q,    c^2 = <C, rot> with M C = rot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import (
    ContactSurgeryDiagram,
    MarkedDiagram,
    extended_matrix,
    homology,
    linking_matrix,
)
from .errors import ConsistencyError, FormulaInapplicableError, SingularMatrixError
from .exact_linalg import det, dot, signature, solve


@dataclass(frozen=True)
class ClassicalInvariants:
    tb_q: Fraction
    rot_q: Fraction
    order_r: int
    h1_order: int


@dataclass(frozen=True)
class D3Report:
    d3: Fraction
    c_squared: Fraction
    sigma: int
    chi: int
    q_plus: int


def _qhs_matrix(d: ContactSurgeryDiagram):
    mat = linking_matrix(d)
    dm = det(mat)
    if dm == 0:
        raise SingularMatrixError("linking matrix is singular; Y is not a rational homology sphere")
    return mat, dm


def rot_q(m: MarkedDiagram) -> Fraction:
    mat, _ = _qhs_matrix(m.diagram)
    if not m.diagram.n:
        return Fraction(m.rot0)
    x = solve(mat, list(m.lk0))
    return m.rot0 - dot(m.diagram.rot_vector, x)


def tb_q(m: MarkedDiagram) -> Fraction:
    _, dm = _qhs_matrix(m.diagram)
    return m.tb0 + Fraction(det(extended_matrix(m)), dm)


def a0_homological(m: MarkedDiagram, r: int) -> Fraction:
    """The a0 with a0*mu0 + r*lambda0 null-homologous in Y minus L0.

    r * lk0 = M x for an integral x (definition of the order r), and the
    mu0-coefficient of that combination of relation rows is <lk0, x>.
    """
    mat, _ = _qhs_matrix(m.diagram)
    if not m.diagram.n:
        return Fraction(0)
    x = solve(mat, [r * v for v in m.lk0])
    if any(xi.denominator != 1 for xi in x):
        raise ConsistencyError(f"r={r} does not annihilate [L0] in H_1(Y)")
    return dot(m.lk0, x)


def a0_crosscheck(m: MarkedDiagram) -> int:
    """Integer a0 = -r det M0 / det M, checked against the homological a0.

    Also asserts r * tb_Q = r * tb0 - a0.  Any failure raises
    :class:`ConsistencyError`.
    """
    _, dm = _qhs_matrix(m.diagram)
    r = homology(m).order_r
    a0 = Fraction(-r * det(extended_matrix(m)), dm)
    if a0.denominator != 1:
        raise ConsistencyError(f"a0 = {a0} is not an integer")
    a0_hom = a0_homological(m, r)
    if a0_hom != a0:
        raise ConsistencyError(f"determinant a0 = {a0} but homological a0 = {a0_hom}")
    if r * tb_q(m) != r * m.tb0 - a0:
        raise ConsistencyError("r * tb_Q != r * tb0 - a0")
    return int(a0)


def tb_q_via_a0(m: MarkedDiagram) -> Fraction:
    """tb_Q = tb0 - a0 / r with a0 from the homology presentation (no determinants)."""
    r = homology(m).order_r
    return m.tb0 - a0_homological(m, r) / r


def classical_invariants(m: MarkedDiagram) -> ClassicalInvariants:
    rep = homology(m)
    if not rep.is_qhs:
        raise SingularMatrixError("linking matrix is singular; Y is not a rational homology sphere")
    return ClassicalInvariants(tb_q(m), rot_q(m), rep.order_r, rep.h1_order)


def d3(d: ContactSurgeryDiagram | MarkedDiagram) -> D3Report:
    if isinstance(d, MarkedDiagram):
        d = d.diagram
    for i, c in enumerate(d.components, start=1):
        if c.sign == 1 and c.tb == 0:
            raise FormulaInapplicableError(f"component {i} is a contact (+1)-surgery with tb = 0")
    mat, _ = _qhs_matrix(d)
    rot = d.rot_vector
    c_vec = solve(mat, rot) if d.n else []
    c2 = Fraction(dot(c_vec, rot))
    sigma = signature(mat)
    chi = 1 + d.n
    q_plus = d.plus_count
    value = (c2 - 3 * sigma - 2 * chi) / 4 + q_plus
    return D3Report(value, c2, sigma, chi, q_plus)


def bennequin_violated(inv: ClassicalInvariants, chi_sigma: int = 1) -> bool:
    """True iff tb_Q + |rot_Q| > -chi(Sigma) / r.

    A violation rules out a tight ambient contact structure.  chi_sigma is
    the Euler characteristic of the rational Seifert surface (1 for a disc).
    """
    return inv.tb_q + abs(inv.rot_q) > Fraction(-chi_sigma, inv.order_r)
