"""Chebyshev-Gauss-Lobatto grids, polynomials, weights and weighted inner products.

Three node families are used throughout:

* S-nodes  ``cos((m+0.5)pi/N)``, m = 0..N-1 (half-integer angles, all interior)
* T-nodes  ``cos(m pi/N)``,      m = 0..N-1 (integer angles, t_0 = 1 exactly)
* U-nodes  ``cos(j pi/(N+1))``,  j = 1..N   (interior, Gauss nodes for weight w)

S-nodes carry the Gauss-Chebyshev rule for the division-weighted space L_d^2
(weight 1/w), U-nodes the rule for the multiplication-weighted space L_m^2
(weight w), where w(t) = sqrt(1 - t^2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GridMismatchError, InvalidSizeError

# Recurrence evaluation above this degree is refused: error growth is unquantified.
MAX_DEGREE = 2048


class GridKind(enum.Enum):
    SNODES = "s"
    TNODES = "t"
    UNODES = "u"


class Basis(enum.Enum):
    FIRST_T = "T"
    SECOND_U = "U"


class Role(enum.Enum):
    PLAIN = "plain"        # f
    HAT_MU = "hat_mu"      # cosh(mu t) f(t)
    TRANSFORM = "transform"  # F
    TILDE_MU = "tilde_mu"  # F_mu / cosh(mu s)


class Space(enum.Enum):
    LD2 = "Ld2"  # (1/pi) integral of f g* / w
    LM2 = "Lm2"  # (1/pi) integral of f g* w


class ResampleMode(enum.Enum):
    T_SERIES = "t_series"    # sum a_n T_n(x)
    WU_SERIES = "wu_series"  # w(x) sum a_n U_{n-1}(x)


@dataclass(frozen=True)
class Grid:
    """Collocation grid: node abscissae plus the generating angles.

    Angles are kept so that w(node) == sin(angle) is available exactly;
    nodes are always the closed-form cosines, never accumulated.
    """

    kind: GridKind
    n: int
    nodes: np.ndarray
    angles: np.ndarray

    def __post_init__(self):
        self.nodes.flags.writeable = False
        self.angles.flags.writeable = False

    @property
    def weights(self) -> np.ndarray:
        """w evaluated at the nodes, computed as sin(angle)."""
        return np.sin(self.angles)

    def matches(self, other: "Grid") -> bool:
        return self.kind is other.kind and self.n == other.n


@dataclass(frozen=True)
class GridFn:
    """Sample values attached to a grid."""

    grid: Grid
    values: np.ndarray
    role: Role = Role.PLAIN

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.ndim != 1 or v.shape[0] != self.grid.n:
            raise GridMismatchError(
                f"values length {v.shape} does not match grid size {self.grid.n}"
            )
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class ChebCoeffs:
    """Coefficients a_0..a_{N-1} of a Chebyshev series."""

    basis: Basis
    coeffs: np.ndarray = field()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.asarray(self.coeffs))


def cgl_nodes(kind: GridKind, n: int) -> Grid:
    """Build a CGL grid of the given kind and size (n >= 2)."""
    if n < 2:
        raise InvalidSizeError(f"grid size must be >= 2, got {n}")
    if kind is GridKind.SNODES:
        angles = (np.arange(n) + 0.5) * np.pi / n
    elif kind is GridKind.TNODES:
        angles = np.arange(n) * np.pi / n
    elif kind is GridKind.UNODES:
        angles = np.arange(1, n + 1) * np.pi / (n + 1)
    else:  # pragma: no cover
        raise GridMismatchError(f"unknown grid kind {kind}")
    return Grid(kind=kind, n=n, nodes=np.cos(angles), angles=angles)


def weight_w(t):
    """w(t) = sqrt(1 - t^2); exactly 0 at +-1. Accepts scalars or arrays."""
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1.0):
        raise DomainError("weight_w argument outside [-1, 1]")
    out = np.sqrt(np.maximum(0.0, (1.0 - t) * (1.0 + t)))
    return out if out.ndim else float(out)


def cheb_eval(basis: Basis, n: int, x, *, max_degree: int = MAX_DEGREE):
    """Evaluate T_n(x) or U_n(x) by the three-term recurrence.

    Vectorized over x. Degrees above ``max_degree`` are refused.
    """
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    if n > max_degree:
        raise DomainError(f"degree {n} exceeds recurrence cap {max_degree}")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise DomainError("cheb_eval argument outside [-1, 1]")
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    if basis is Basis.FIRST_T:
        prev, cur = np.ones_like(x), x.copy()
    else:
        prev, cur = np.ones_like(x), 2.0 * x
    if n == 0:
        out = prev
    elif n == 1:
        out = cur
    else:
        for _ in range(n - 1):
            prev, cur = cur, 2.0 * x * cur - prev
        out = cur
    return float(out[0]) if scalar else out


def _check_quadrature_grid(f: GridFn, g: GridFn, space: Space) -> None:
    if not f.grid.matches(g.grid):
        raise GridMismatchError("operands live on different grids")
    wanted = GridKind.SNODES if space is Space.LD2 else GridKind.UNODES
    if f.grid.kind is not wanted:
        raise GridMismatchError(
            f"{space.value} inner product needs {wanted.value}-nodes, "
            f"got {f.grid.kind.value}-nodes"
        )


def inner_product(f: GridFn, g: GridFn, space: Space):
    """Discrete weighted inner product.

    L_d^2 uses the first-kind Gauss-Chebyshev rule on S-nodes,
    L_m^2 the second-kind rule on U-nodes; both rules are exact for
    polynomial integrands of degree <= 2N-1 and already include the 1/pi
    normalization of the continuous inner products.
    """
    _check_quadrature_grid(f, g, space)
    n = f.grid.n
    prod = f.values * np.conj(g.values)
    if space is Space.LD2:
        val = np.sum(prod) / n
    else:
        val = np.sum(prod * np.sin(f.grid.angles) ** 2) / (n + 1)
    return complex(val) if np.iscomplexobj(prod) else float(val)


def norm(f: GridFn, space: Space) -> float:
    """Weighted L^2 norm: sqrt of inner_product(f, f, space)."""
    val = inner_product(f, f, space)
    return float(np.sqrt(np.real(val)))


def resample(coeffs: ChebCoeffs, targets, mode: ResampleMode):
    """Evaluate a coefficient vector on arbitrary targets in [-1, 1].

    T_SERIES returns sum a_n T_n(x); WU_SERIES returns
    w(x) * sum a_n U_{n-1}(x), where the n = 0 term contributes nothing
    (U_{-1} = 0).
    """
    x = np.asarray(targets, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise DomainError("resample targets outside [-1, 1]")
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    a = np.asarray(coeffs.coeffs)
    n_terms = a.shape[0]
    if n_terms - 1 > MAX_DEGREE:
        raise DomainError(f"series degree {n_terms - 1} exceeds cap {MAX_DEGREE}")
    out = np.zeros(x.shape, dtype=a.dtype)
    if mode is ResampleMode.T_SERIES:
        prev, cur = np.ones_like(x), x
        if n_terms > 0:
            out = out + a[0] * prev
        if n_terms > 1:
            out = out + a[1] * cur
        for k in range(2, n_terms):
            prev, cur = cur, 2.0 * x * cur - prev
            out = out + a[k] * cur
    else:
        # U_{n-1} with the a_0 term dropped.
        prev, cur = np.zeros_like(x), np.ones_like(x)  # U_{-1}, U_0
        if n_terms > 1:
            out = out + a[1] * cur
        for k in range(2, n_terms):
            prev, cur = cur, 2.0 * x * cur - prev
            out = out + a[k] * cur
        out = weight_w(x) * out
    return complex(out[0]) if scalar and np.iscomplexobj(out) else (
        float(out[0]) if scalar else out
    )
