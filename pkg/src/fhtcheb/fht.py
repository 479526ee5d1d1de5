"""Forward and inverse finite Hilbert transform in both weighted flavors.

Division flavor (d): f sampled on T-nodes, F on S-nodes, F = C3 S1^T f.
The constant (T_0) component of F violates the range condition
integral(F/w) = 0 and is silently annihilated by the inverse.

Multiplication flavor (m): f sampled on S-nodes, F on U-nodes. f is
analyzed in the basis {T_{n+1}/w}; the residual constant-over-w component
maps to zero. The basis map is T_{n+1}/w <-> U_n with the positive sign of
the classical Tricomi pairs; see the sign note in cosh.py for how this
composes with the plain-convention transform.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import GridMismatchError
from .grids import (
    Basis,
    ChebCoeffs,
    Grid,
    GridFn,
    GridKind,
    ResampleMode,
    Role,
    Space,
    cgl_nodes,
    inner_product,
    norm,
    resample,
)
from .transforms import TransformKind, apply, build, t_shift_synthesis, u_synthesis


class Flavor(enum.Enum):
    D = "d"  # f in L_d^2, F in E_d^2
    M = "m"  # f in E_m^2, F in L_m^2


def _require(f: GridFn, kind: GridKind) -> None:
    if f.grid.kind is not kind:
        raise GridMismatchError(
            f"expected {kind.value}-nodes, got {f.grid.kind.value}-nodes"
        )


# ---------------------------------------------------------------------------
# coefficient analysis / synthesis helpers

def coeffs_from_tgrid(f: GridFn) -> ChebCoeffs:
    """Series coefficients a_n of a T-grid function: f(cos th) = sum a_n sin(n th).

    The same a_n are the T-series coefficients of the forward image
    F(cos th) = sum a_n cos(n th); a_0 is identically zero (range condition).
    """
    _require(f, GridKind.TNODES)
    n = f.grid.n
    s1 = build(TransformKind.S1, n)
    a = np.sqrt(2.0 / n) * apply(s1, f.values, transposed=True)
    a[0] = 0.0
    return ChebCoeffs(basis=Basis.FIRST_T, coeffs=a)


def coeffs_from_sgrid(F: GridFn) -> ChebCoeffs:
    """T-series coefficients of an S-grid function (a_0 included)."""
    _require(F, GridKind.SNODES)
    n = F.grid.n
    c3 = build(TransformKind.C3, n)
    ah = apply(c3, F.values, transposed=True)
    a = np.sqrt(2.0 / n) * ah
    a[0] = ah[0] / np.sqrt(n)
    return ChebCoeffs(basis=Basis.FIRST_T, coeffs=a)


def m_analysis_sgrid(f: GridFn) -> tuple[float, np.ndarray]:
    """Split f on S-nodes as (c0 + sum_n d_n T_{n+1}) / w.

    Returns (c0, d); c0/w is the component the forward transform annihilates.
    """
    _require(f, GridKind.SNODES)
    n = f.grid.n
    g = f.values * f.grid.weights
    ma = build(TransformKind.M_ANALYSIS_COS, n)
    d = apply(ma, g, transposed=True)
    c0 = float(np.sum(g) / n)
    return c0, d


def sgrid_to_unodes(f: GridFn) -> np.ndarray:
    """Resample an S-grid function onto the U-grid of the same size."""
    c0, d = m_analysis_sgrid(f)
    ug = cgl_nodes(GridKind.UNODES, f.grid.n)
    tcoeffs = np.concatenate(([c0], d))
    vals = resample(ChebCoeffs(Basis.FIRST_T, tcoeffs), ug.nodes, ResampleMode.T_SERIES)
    return vals / ug.weights


def tgrid_to_snodes(f: GridFn) -> np.ndarray:
    """Resample a T-grid function onto the S-grid via its sine series."""
    a = coeffs_from_tgrid(f)
    sg = cgl_nodes(GridKind.SNODES, f.grid.n)
    return resample(a, sg.nodes, ResampleMode.WU_SERIES)


# ---------------------------------------------------------------------------
# the four transform operations

def fht_forward_d(f: GridFn) -> GridFn:
    """F = C3 S1^T f: maps w U_{n-1} samples on T-nodes to T_n on S-nodes."""
    _require(f, GridKind.TNODES)
    n = f.grid.n
    c3, s1 = build(TransformKind.C3, n), build(TransformKind.S1, n)
    out = apply(c3, apply(s1, f.values, transposed=True))
    return GridFn(cgl_nodes(GridKind.SNODES, n), out, Role.TRANSFORM)


def fht_inverse_d(F: GridFn) -> GridFn:
    """f = S1 C3^T F; the T_0 component of F is annihilated."""
    _require(F, GridKind.SNODES)
    n = F.grid.n
    c3, s1 = build(TransformKind.C3, n), build(TransformKind.S1, n)
    out = apply(s1, apply(c3, F.values, transposed=True))
    return GridFn(cgl_nodes(GridKind.TNODES, n), out, Role.PLAIN)


def fht_forward_m(f: GridFn) -> GridFn:
    """Map T_{n+1}/w components on S-nodes to U_n on U-nodes; C/w maps to 0."""
    _, d = m_analysis_sgrid(f)
    n = f.grid.n
    out = u_synthesis(n) @ d
    return GridFn(cgl_nodes(GridKind.UNODES, n), out, Role.TRANSFORM)


def fht_inverse_m(F: GridFn) -> GridFn:
    """Map U_n components on U-nodes back to T_{n+1}/w on S-nodes."""
    _require(F, GridKind.UNODES)
    n = F.grid.n
    ms = build(TransformKind.M_SYNTHESIS_SIN, n)
    d = apply(ms, F.values, transposed=True)
    sg = cgl_nodes(GridKind.SNODES, n)
    out = (t_shift_synthesis(n) @ d) / sg.weights
    return GridFn(sg, out, Role.PLAIN)


def range_defect(F: GridFn) -> float:
    """Component 0 of C3^T F = (1/sqrt(N)) sum F(s_m); zero iff F is in range."""
    _require(F, GridKind.SNODES)
    c3 = build(TransformKind.C3, F.grid.n)
    return float(apply(c3, F.values, transposed=True)[0])


# ---------------------------------------------------------------------------
# Plancherel validators

@dataclass(frozen=True)
class PlancherelReport:
    lhs: float
    rhs: float
    defect: float


def plancherel_check(f: GridFn, flavor: Flavor) -> PlancherelReport:
    """Check the Plancherel-like equalities in the flavor's own norm.

    D flavor: ||F||_{Ld}^2 == ||f||_{Ld}^2 for f given on T-nodes.
    M flavor: ||F||_{Lm}^2 == ||f||_{Lm}^2 - <f, 1/w>_m^2 for real f on
    S-nodes (the mean term is the normalized form of the (integral f)^2
    correction; <f, 1/w>_m = (1/pi) integral f dt).
    """
    if flavor is Flavor.D:
        F = fht_forward_d(f)
        lhs = norm(F, Space.LD2) ** 2
        sg = F.grid
        f_on_s = GridFn(sg, tgrid_to_snodes(f))
        rhs = norm(f_on_s, Space.LD2) ** 2
    else:
        F = fht_forward_m(f)
        lhs = norm(F, Space.LM2) ** 2
        ug = F.grid
        f_on_u = GridFn(ug, sgrid_to_unodes(f))
        inv_w = GridFn(ug, 1.0 / ug.weights)
        mean = inner_product(f_on_u, inv_w, Space.LM2)
        rhs = norm(f_on_u, Space.LM2) ** 2 - float(np.real(mean)) ** 2
    return PlancherelReport(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))
