"""Normalized Hermite polynomials and finite expansions under the Gaussian measure.

Everything here works with the probability measure gamma_d = exp(-|x|^2) / pi^(d/2) dx
on R^d.  The basis functions are the physicists' Hermite polynomials H_n (weight
exp(-x^2)) normalized so that

    h_nu(x) = prod_i H_{nu_i}(x_i) / sqrt(2^|nu| nu!),      <h_nu, h_mu>_gamma = delta.

Finite expansions (sparse maps multi-index -> coefficient) are the single function
representation used by the rest of the package; point samples appear only inside
quadrature loops.  All objects are immutable after construction and all operations
are pure functions, so they are safe to share across workers.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from itertools import product

import numpy as np
from numpy.polynomial.hermite import hermgauss

__all__ = [
    "MultiIndex",
    "HermiteExpansion",
    "GaussHermiteGrid",
    "SpectralMultiplier",
    "QuadratureExactnessWarning",
    "gauss_hermite_grid",
    "hermite_eval",
    "hermite_values_1d",
    "expansion_eval",
    "inner_product_gamma",
    "lp_norm_gamma",
    "lp_norm",
    "l2_norm_coeffs",
    "chaos_project",
    "pi0",
    "default_grid",
]

MAX_NODES_PER_AXIS = 200


class QuadratureExactnessWarning(UserWarning):
    """A quadrature rule was used outside its polynomial exactness range."""


class MultiIndex(tuple):
    """Exponent tuple nu = (nu_1, ..., nu_d) of non-negative integers.

    Behaves like a plain tuple (hashable, comparable with tuples), with the
    total order |nu| cached.  |nu| is the spectral quantity: the number
    operator has eigenvalue -|nu| on h_nu, its square root has -sqrt(|nu|).
    """

    def __new__(cls, exponents):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"multi-index entries must be >= 0, got {exps}")
        self = super().__new__(cls, exps)
        self._order = sum(exps)
        return self

    @property
    def order(self) -> int:
        return self._order

    @property
    def dimension(self) -> int:
        return len(self)


def _norm_factor(n: int) -> float:
    # 1 / sqrt(2^n n!), applied once per basis function (not inside the recurrence)
    return math.exp(-0.5 * (n * math.log(2.0) + math.lgamma(n + 1.0)))


def hermite_values_1d(xs, nmax: int) -> np.ndarray:
    """Table of normalized 1-d Hermite values, shape (len(xs), nmax+1).

    Three-term recurrence of the raw physicists' polynomials; the column for
    degree n is then rescaled by 1/sqrt(2^n n!).
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    table = np.empty((xs.size, nmax + 1))
    table[:, 0] = 1.0
    if nmax >= 1:
        table[:, 1] = 2.0 * xs
    for n in range(1, nmax):
        table[:, n + 1] = 2.0 * xs * table[:, n] - 2.0 * n * table[:, n - 1]
    for n in range(nmax + 1):
        table[:, n] *= _norm_factor(n)
    return table


def hermite_eval(nu, x) -> float:
    """h_nu(x) for a single multi-index, independent of the table machinery."""
    nu = MultiIndex(nu)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.size != len(nu):
        raise ValueError(f"point has dimension {x.size}, index has {len(nu)}")
    out = 1.0
    for xi, ni in zip(x, nu):
        if ni == 0:
            continue
        h_prev, h = 1.0, 2.0 * xi
        for n in range(1, ni):
            h_prev, h = h, 2.0 * xi * h - 2.0 * n * h_prev
        out *= h * _norm_factor(ni)
    return out


class HermiteExpansion:
    """Finite Hermite expansion: sparse map multi-index -> real coefficient.

    Treat instances as immutable; arithmetic returns new expansions.  Zero
    coefficients are dropped on construction.
    """

    __slots__ = ("dimension", "_coeffs", "_degree")

    def __init__(self, dimension: int, coeffs=None):
        if dimension < 1:
            raise ValueError("dimension must be >= 1")
        self.dimension = int(dimension)
        clean: dict[MultiIndex, float] = {}
        for nu, c in (coeffs or {}).items():
            nu = MultiIndex(nu)
            if len(nu) != self.dimension:
                raise ValueError(f"index {tuple(nu)} has dimension {len(nu)}, expected {dimension}")
            c = float(c)
            if c != 0.0:
                clean[nu] = c
        self._coeffs = clean
        self._degree = max((nu.order for nu in clean), default=0)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def basis(cls, nu, coefficient: float = 1.0) -> "HermiteExpansion":
        nu = MultiIndex(nu)
        return cls(len(nu), {nu: coefficient})

    @classmethod
    def constant(cls, dimension: int, value: float) -> "HermiteExpansion":
        return cls(dimension, {MultiIndex((0,) * dimension): value})

    @classmethod
    def zero(cls, dimension: int) -> "HermiteExpansion":
        return cls(dimension, {})

    # -- basic queries ---------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        """Coefficient map (read-only by convention)."""
        return self._coeffs

    @property
    def degree(self) -> int:
        return self._degree

    def coefficient(self, nu) -> float:
        return self._coeffs.get(MultiIndex(nu), 0.0)

    @property
    def mean(self) -> float:
        """Integral against gamma_d, i.e. the nu = 0 coefficient."""
        return self._coeffs.get(MultiIndex((0,) * self.dimension), 0.0)

    def orders(self):
        """Sorted chaos orders |nu| present with a nonzero coefficient."""
        return sorted({nu.order for nu in self._coeffs})

    def __len__(self):
        return len(self._coeffs)

    def __repr__(self):
        return f"HermiteExpansion(d={self.dimension}, terms={len(self._coeffs)}, degree={self.degree})"

    def __eq__(self, other):
        return (
            isinstance(other, HermiteExpansion)
            and self.dimension == other.dimension
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.dimension, frozenset(self._coeffs.items())))

    # -- linear algebra ----------------------------------------------------------

    def __add__(self, other: "HermiteExpansion") -> "HermiteExpansion":
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")
        merged = dict(self._coeffs)
        for nu, c in other._coeffs.items():
            merged[nu] = merged.get(nu, 0.0) + c
        return HermiteExpansion(self.dimension, merged)

    def __sub__(self, other: "HermiteExpansion") -> "HermiteExpansion":
        return self + (-1.0) * other

    def __mul__(self, scalar) -> "HermiteExpansion":
        s = float(scalar)
        return HermiteExpansion(self.dimension, {nu: s * c for nu, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return (-1.0) * self

    def apply_order_multiplier(self, factor) -> "HermiteExpansion":
        """New expansion with each coefficient scaled by factor(|nu|)."""
        return HermiteExpansion(
            self.dimension, {nu: c * factor(nu.order) for nu, c in self._coeffs.items()}
        )

    # -- evaluation ----------------------------------------------------------------

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Values at an (npoints, d) array, sharing per-axis recurrence tables."""
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(-1, self.dimension) if self.dimension > 1 else pts.reshape(-1, 1)
        if pts.shape[1] != self.dimension:
            raise ValueError(f"points have dimension {pts.shape[1]}, expansion has {self.dimension}")
        if not self._coeffs:
            return np.zeros(pts.shape[0])
        tables = [hermite_values_1d(pts[:, i], self.degree) for i in range(self.dimension)]
        out = np.zeros(pts.shape[0])
        for nu, c in self._coeffs.items():
            term = np.full(pts.shape[0], c)
            for i, ni in enumerate(nu):
                term *= tables[i][:, ni]
            out += term
        return out

    def __call__(self, x) -> float:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if x.size != self.dimension:
            raise ValueError(f"point has dimension {x.size}, expansion has {self.dimension}")
        return float(self.evaluate_many(x.reshape(1, -1))[0])

    def chaos_values(self, x) -> np.ndarray:
        """Array g with g[n] = value at x of the order-n part, n = 0..degree."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        tables = [hermite_values_1d(x[i : i + 1], self.degree) for i in range(self.dimension)]
        out = np.zeros(self.degree + 1)
        for nu, c in self._coeffs.items():
            v = c
            for i, ni in enumerate(nu):
                v *= tables[i][0, ni]
            out[nu.order] += v
        return out

    # -- serialization ----------------------------------------------------------------

    def to_dict(self) -> dict:
        items = sorted(self._coeffs.items())
        return {"d": self.dimension, "coeffs": [{"nu": list(nu), "c": c} for nu, c in items]}

    @classmethod
    def from_dict(cls, data: dict) -> "HermiteExpansion":
        return cls(data["d"], {tuple(item["nu"]): item["c"] for item in data["coeffs"]})

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "HermiteExpansion":
        return cls.from_dict(json.loads(text))


def expansion_eval(f: HermiteExpansion, x) -> float:
    """Evaluate f at a point (table-based path, cross-checked against hermite_eval)."""
    return f(x)


@dataclass(frozen=True, eq=False)
class SpectralMultiplier:
    """Scalar multiplier acting on the chaos order n = |nu|.

    Every operator in this package is diagonal on Hermite expansions; this class
    carries the diagonal.  Supported kinds and their value at order n:

      ou(t)                exp(-t n)
      poisson(t)           exp(-t sqrt(n))
      poisson_deriv(t, k)  (-sqrt(n))^k exp(-t sqrt(n))
      riesz_potential(b)   n^(-b/2), and 0 at n = 0
      bessel_potential(b)  (1 + sqrt(n))^(-b)
      riesz_derivative(b)  n^(b/2), and 0 at n = 0
      bessel_derivative(b) (1 + sqrt(n))^b
    """

    kind: str
    t: float = 0.0
    beta: float = 0.0
    k: int = 0

    @classmethod
    def ou(cls, t):
        return cls("ou", t=float(t))

    @classmethod
    def poisson(cls, t):
        return cls("poisson", t=float(t))

    @classmethod
    def poisson_deriv(cls, t, k):
        return cls("poisson_deriv", t=float(t), k=int(k))

    @classmethod
    def riesz_potential(cls, beta):
        return cls("riesz_potential", beta=float(beta))

    @classmethod
    def bessel_potential(cls, beta):
        return cls("bessel_potential", beta=float(beta))

    @classmethod
    def riesz_derivative(cls, beta):
        return cls("riesz_derivative", beta=float(beta))

    @classmethod
    def bessel_derivative(cls, beta):
        return cls("bessel_derivative", beta=float(beta))

    def __call__(self, n: int) -> float:
        rt = math.sqrt(n)
        if self.kind == "ou":
            return math.exp(-self.t * n)
        if self.kind == "poisson":
            return math.exp(-self.t * rt)
        if self.kind == "poisson_deriv":
            if self.k == 0:
                return math.exp(-self.t * rt)
            return (-rt) ** self.k * math.exp(-self.t * rt)
        if self.kind == "riesz_potential":
            return 0.0 if n == 0 else n ** (-self.beta / 2.0)
        if self.kind == "bessel_potential":
            return (1.0 + rt) ** (-self.beta)
        if self.kind == "riesz_derivative":
            return 0.0 if n == 0 else n ** (self.beta / 2.0)
        if self.kind == "bessel_derivative":
            return (1.0 + rt) ** self.beta
        raise ValueError(f"unknown multiplier kind {self.kind!r}")

    def apply(self, f: HermiteExpansion) -> HermiteExpansion:
        return f.apply_order_multiplier(self)


# -- Gaussian quadrature --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GaussHermiteGrid:
    """Tensor Gauss-Hermite rule normalized to the probability measure gamma_d.

    nodes has shape (m^d, d); weights sum to 1.  axis_nodes / axis_weights are
    the underlying 1-d rule (ascending nodes, so grids are reproducible).
    """

    dimension: int
    nodes: np.ndarray
    weights: np.ndarray
    nodes_per_axis: int
    axis_nodes: np.ndarray = field(repr=False, default=None)
    axis_weights: np.ndarray = field(repr=False, default=None)

    def exact_degree(self) -> int:
        """Largest per-axis polynomial degree integrated exactly."""
        return 2 * self.nodes_per_axis - 1


def gauss_hermite_grid(d: int, m: int, max_nodes_per_axis: int = MAX_NODES_PER_AXIS) -> GaussHermiteGrid:
    """Build the m-point-per-axis rule for gamma_d.

    The 1-d nodes/weights come from the symmetric tridiagonal (Golub-Welsch)
    eigenproblem for the exp(-x^2) weight; weights are divided by sqrt(pi) so
    they sum to 1.  Tensorized to d dimensions: m^d nodes.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if m < 2:
        raise ValueError("m must be >= 2")
    if m > max_nodes_per_axis:
        raise ValueError(f"m = {m} exceeds the per-axis cap {max_nodes_per_axis}")
    x1, w1 = hermgauss(m)
    w1 = w1 / math.sqrt(math.pi)
    if d == 1:
        nodes = x1.reshape(-1, 1)
        weights = w1.copy()
    else:
        nodes = np.array(list(product(x1, repeat=d)))
        weights = w1
        for _ in range(d - 1):
            weights = np.outer(weights, w1).ravel()
    return GaussHermiteGrid(d, nodes, weights, m, x1, w1)


def default_grid(f: HermiteExpansion, p: float = 2.0) -> GaussHermiteGrid:
    """Grid sized for |f|^p at moderate p: m = 4 * degree + 8, capped per axis."""
    m = min(max(4 * f.degree + 8, 13), MAX_NODES_PER_AXIS)
    return gauss_hermite_grid(f.dimension, m)


def inner_product_gamma(f: HermiteExpansion, g: HermiteExpansion, grid: GaussHermiteGrid) -> float:
    """<f, g>_gamma by quadrature; equals sum of coefficient products on exact grids.

    Warns (QuadratureExactnessWarning) when the grid cannot integrate the
    product exactly, i.e. m < (deg f + deg g)/2 + 1.
    """
    if f.dimension != g.dimension or f.dimension != grid.dimension:
        raise ValueError("dimension mismatch between expansions and grid")
    if f.degree + g.degree > grid.exact_degree():
        warnings.warn(
            f"grid with m={grid.nodes_per_axis} is not exact for degree "
            f"{f.degree}+{g.degree}; result is approximate",
            QuadratureExactnessWarning,
            stacklevel=2,
        )
    return float(np.dot(grid.weights, f.evaluate_many(grid.nodes) * g.evaluate_many(grid.nodes)))


def l2_norm_coeffs(f: HermiteExpansion) -> float:
    """Coefficient ell^2 norm, the exact L^2(gamma_d) norm by orthonormality."""
    return math.sqrt(sum(c * c for c in f.coeffs.values()))


def lp_norm_gamma(f: HermiteExpansion, p: float, grid: GaussHermiteGrid) -> float:
    """(sum_i w_i |f(x_i)|^p)^(1/p) on the supplied grid."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if f.dimension != grid.dimension:
        raise ValueError("dimension mismatch between expansion and grid")
    vals = np.abs(f.evaluate_many(grid.nodes))
    return float(np.dot(grid.weights, vals**p) ** (1.0 / p))


def _power_basis_1d(f: HermiteExpansion) -> np.ndarray:
    from numpy.polynomial import hermite

    raw = np.zeros(f.degree + 1)
    for nu, c in f.coeffs.items():
        raw[nu[0]] += c * _norm_factor(nu[0])
    return hermite.herm2poly(raw) if f.degree > 0 else raw


def _gauss_moment(j: int, a: float, b: float) -> float:
    # int_a^b x^j exp(-x^2) dx, by parts; a, b may be +-inf
    from scipy.special import erf

    def edge(u):
        return 0.0 if math.isinf(u) else math.exp(-u * u)

    if j == 0:
        ea = -1.0 if a == -math.inf else erf(a)
        eb = 1.0 if b == math.inf else erf(b)
        return math.sqrt(math.pi) / 2.0 * (eb - ea)
    if j == 1:
        return 0.5 * (edge(a) - edge(b))
    ta = 0.0 if math.isinf(a) else a ** (j - 1) * edge(a)
    tb = 0.0 if math.isinf(b) else b ** (j - 1) * edge(b)
    return 0.5 * (ta - tb) + (j - 1) / 2.0 * _gauss_moment(j - 2, a, b)


def _abs_moment_exact_1d(f: HermiteExpansion, p: int) -> float:
    """int |f|^p dgamma_1 for odd integer p, by sign-splitting at the real roots.

    |f|^p is piecewise +-f^p, a polynomial on each interval between real roots,
    so each piece integrates in closed form via erf/exp moments.
    """
    poly = _power_basis_1d(f)
    fp = poly
    for _ in range(p - 1):
        fp = np.polynomial.polynomial.polymul(fp, poly)
    scale = np.max(np.abs(poly))
    if scale == 0.0:
        return 0.0
    roots = np.polynomial.polynomial.polyroots(poly) if f.degree > 0 else np.array([])
    cuts = sorted({r.real for r in roots if abs(r.imag) <= 1e-9 * (1.0 + abs(r))})
    pts = [-math.inf] + cuts + [math.inf]
    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        mid = 0.5 * (a + b) if math.isfinite(a) and math.isfinite(b) else (b - 1.0 if math.isinf(a) else a + 1.0)
        sign = 1.0 if np.polynomial.polynomial.polyval(mid, fp) >= 0 else -1.0
        total += sign * sum(fp[j] * _gauss_moment(j, a, b) for j in range(len(fp)))
    return total / math.sqrt(math.pi)


def lp_norm(f: HermiteExpansion, p: float, grid: GaussHermiteGrid | None = None) -> float:
    """L^p(gamma_d) norm with the most accurate available route.

    p = 2 uses the coefficient norm (exact).  Even integer p uses quadrature on
    a grid exact for |f|^p = f^p.  Odd integer p in d = 1 uses closed-form
    sign-split integration (Gauss-Hermite converges poorly across the kinks of
    |f|^p).  Everything else falls back to plain quadrature on `grid` or a
    default m = 4*degree + 8 grid.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if p == 2:
        return l2_norm_coeffs(f)
    if not f.coeffs:
        return 0.0
    p_int = int(round(p))
    if p == p_int and p_int % 2 == 0:
        m = min(max((p_int * f.degree) // 2 + 1, 2), MAX_NODES_PER_AXIS)
        g = grid if grid is not None and grid.exact_degree() >= p_int * f.degree else gauss_hermite_grid(f.dimension, m)
        return lp_norm_gamma(f, p, g)
    if p == p_int and f.dimension == 1:
        return _abs_moment_exact_1d(f, p_int) ** (1.0 / p_int)
    return lp_norm_gamma(f, p, grid if grid is not None else default_grid(f, p))


def chaos_project(f: HermiteExpansion, n: int) -> HermiteExpansion:
    """Projection onto the order-n chaos: keep coefficients with |nu| = n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return HermiteExpansion(f.dimension, {nu: c for nu, c in f.coeffs.items() if nu.order == n})


def pi0(f: HermiteExpansion) -> HermiteExpansion:
    """Remove the mean: zero the nu = 0 coefficient, keep everything else."""
    zero = MultiIndex((0,) * f.dimension)
    return HermiteExpansion(f.dimension, {nu: c for nu, c in f.coeffs.items() if nu != zero})
