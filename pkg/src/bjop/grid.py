"""Phase-space operators on a periodic 1-D grid.

Samples sit at ``x_m = -L/2 + m L/N`` and the frequency lattice is
``xi_k = 2 pi k / L`` for ``k = -N/2 .. N/2-1``. A phase point ``(x0, xi0)``
is commensurate when ``x0`` is a multiple of ``2 pi / L`` (modulation stays
periodic) and ``xi0`` a multiple of ``L / N`` (shift is a whole number of
samples). Off-lattice shifts fall back to a Fourier phase ramp, which is
exact for band-limited data.
"""

from __future__ import annotations

import csv
import io
import json
import math
import warnings
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import CommensurabilityError, GridMismatch, NonFiniteInput

__all__ = [
    "Grid",
    "GridFunction",
    "PhasePoint",
    "TAU_PHASE_SIGN",
    "AliasingWarning",
    "apply_M",
    "apply_R",
    "apply_T",
    "apply_bj_bandlimited",
    "apply_bj_planewave",
    "apply_fourier_multiplier",
    "apply_mult",
    "apply_tau_planewave",
    "commutator_apply",
    "dft_forward",
    "dft_inverse",
    "gaussian",
    "hermite1",
    "modulate",
    "modulation_op",
    "planewave",
    "reflect",
    "shift",
    "shift_op",
    "sinc",
]

_LATTICE_RTOL = 1e-9

# Sign of the exponent in the tau phase exp(+/- (i/2)(2 tau - 1) t). Either
# sign averages to sinc(t/2) over [0, 1]; +1 is the one for which tau = 0
# reproduces the x-left ordering exp(i x0 x) exp(i xi0 D).
TAU_PHASE_SIGN = 1


class AliasingWarning(UserWarning):
    """Modulation frequency is off the grid's frequency lattice."""


def _on_lattice(value: float, quantum: float) -> bool:
    q = value / quantum
    return abs(q - round(q)) <= _LATTICE_RTOL * max(1.0, abs(q))


@dataclass(frozen=True)
class Grid:
    N: int = 256
    L: float = 16 * math.pi

    def __post_init__(self):
        if self.N < 8 or self.N % 2:
            raise ValueError(f"N must be even and at least 8, got {self.N}")
        if self.N & (self.N - 1):
            raise ValueError(f"N must be a power of two, got {self.N}")
        if not self.L > 0:
            raise ValueError("L must be positive")

    @property
    def dx(self) -> float:
        return self.L / self.N

    @property
    def dxi(self) -> float:
        return 2 * math.pi / self.L

    @property
    def x(self) -> np.ndarray:
        return -self.L / 2 + self.dx * np.arange(self.N)

    @property
    def k(self) -> np.ndarray:
        return np.arange(-self.N // 2, self.N // 2)

    @property
    def xi(self) -> np.ndarray:
        return self.dxi * self.k

    def to_config(self) -> dict:
        return {"N": self.N, "L": self.L}

    @classmethod
    def from_config(cls, cfg: Mapping) -> Grid:
        return cls(int(cfg.get("N", 256)), float(cfg.get("L", 16 * math.pi)))


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Immutable complex samples on a grid.

    ``domain`` is ``"x"`` for position samples or ``"xi"`` for samples on the
    frequency lattice (ordered by ``grid.k``). The norm uses the matching
    measure, ``dx`` or ``dxi``.
    """

    grid: Grid
    values: np.ndarray
    domain: str = field(default="x")

    def __post_init__(self):
        v = np.array(self.values, dtype=complex)
        if v.shape != (self.grid.N,):
            raise ValueError(f"expected {self.grid.N} samples, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise NonFiniteInput("grid function has NaN or Inf samples")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)
        if self.domain not in ("x", "xi"):
            raise ValueError(f"unknown domain {self.domain!r}")

    @property
    def weight(self) -> float:
        return self.grid.dx if self.domain == "x" else self.grid.dxi

    def norm(self) -> float:
        return math.sqrt(self.weight * float(np.vdot(self.values, self.values).real))

    def inner(self, other: GridFunction) -> complex:
        """``(self | other) = sum self * conj(other) * weight``."""
        _same_grid(self, other)
        return complex(self.weight * np.vdot(other.values, self.values))

    def normalized(self) -> GridFunction:
        return self * (1.0 / self.norm())

    def _wrap(self, values):
        return GridFunction(self.grid, values, self.domain)

    def __add__(self, other):
        _same_grid(self, other)
        return self._wrap(self.values + other.values)

    def __sub__(self, other):
        _same_grid(self, other)
        return self._wrap(self.values - other.values)

    def __neg__(self):
        return self._wrap(-self.values)

    def __mul__(self, c):
        if isinstance(c, GridFunction):
            return NotImplemented
        return self._wrap(complex(c) * self.values)

    __rmul__ = __mul__

    # serialization

    def to_csv(self, path=None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "x", "re", "im"])
        coords = self.grid.x if self.domain == "x" else self.grid.xi
        for m, (c, v) in enumerate(zip(coords, self.values)):
            w.writerow([m, repr(float(c)), repr(float(v.real)), repr(float(v.imag))])
        text = buf.getvalue()
        if path is not None:
            Path(path).write_text(text)
        return text

    @classmethod
    def from_csv(cls, source, grid: Grid | None = None) -> GridFunction:
        """Read ``index,x,re,im`` rows from a path or CSV text."""
        text = _read_text(source)
        rows = list(csv.DictReader(io.StringIO(text)))
        if not rows:
            raise ValueError("empty CSV")
        rows.sort(key=lambda r: int(r["index"]))
        if grid is None:
            n = len(rows)
            x0 = float(rows[0]["x"])
            grid = Grid(n, -2 * x0)
        vals = [complex(float(r["re"]), float(r["im"])) for r in rows]
        return cls(grid, vals)

    def to_json(self, path=None) -> str:
        payload = {
            "grid": self.grid.to_config(),
            "domain": self.domain,
            "re": [float(v) for v in self.values.real],
            "im": [float(v) for v in self.values.imag],
        }
        text = json.dumps(payload)
        if path is not None:
            Path(path).write_text(text)
        return text

    @classmethod
    def from_json(cls, source) -> GridFunction:
        data = json.loads(_read_text(source))
        grid = Grid.from_config(data["grid"])
        vals = np.asarray(data["re"], float) + 1j * np.asarray(data["im"], float)
        return cls(grid, vals, data.get("domain", "x"))


def _read_text(source) -> str:
    """Return file contents for a path, or ``source`` itself if it is text."""
    if isinstance(source, Path):
        return source.read_text()
    if "\n" not in source and Path(source).is_file():
        return Path(source).read_text()
    return source


def _same_grid(u, v):
    if not isinstance(v, GridFunction):
        raise TypeError("expected a GridFunction")
    if u.grid != v.grid or u.domain != v.domain:
        raise GridMismatch("grid functions live on different grids")


@dataclass(frozen=True)
class PhasePoint:
    """Pair ``(x0, xi0)``: modulation frequency and shift amount."""

    x0: float
    xi0: float

    @property
    def t(self) -> float:
        return self.x0 * self.xi0

    def __neg__(self):
        return PhasePoint(-self.x0, -self.xi0)

    def __add__(self, other):
        return PhasePoint(self.x0 + other.x0, self.xi0 + other.xi0)

    def is_commensurate(self, grid: Grid) -> bool:
        return _on_lattice(self.x0, grid.dxi) and _on_lattice(self.xi0, grid.dx)

    @classmethod
    def from_lattice(cls, grid: Grid, k1: int, k2: int) -> PhasePoint:
        """``x0 = k1 * 2 pi / L`` and ``xi0 = k2 * L / N``."""
        return cls(k1 * grid.dxi, k2 * grid.dx)


def sinc(t: float) -> float:
    """``sin(t) / t`` with ``sinc(0) = 1``."""
    if abs(t) < 1e-6:
        t2 = t * t
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    return math.sin(t) / t


# transforms


def _sign_k(grid):
    return np.where(grid.k % 2 == 0, 1.0, -1.0)


def dft_forward(u: GridFunction) -> GridFunction:
    """Discrete ``(2 pi)^(-1/2) int exp(-i xi x) u(x) dx`` on the lattice."""
    if u.domain != "x":
        raise ValueError("dft_forward expects position samples")
    g = u.grid
    scale = g.L / (g.N * math.sqrt(2 * math.pi))
    # exp(-i xi_k x_m) = (-1)^k exp(-2 pi i k m / N)
    vals = scale * _sign_k(g) * np.fft.fftshift(np.fft.fft(u.values))
    return GridFunction(g, vals, "xi")


def dft_inverse(uhat: GridFunction) -> GridFunction:
    if uhat.domain != "xi":
        raise ValueError("dft_inverse expects frequency samples")
    g = uhat.grid
    scale = math.sqrt(2 * math.pi) * g.N / g.L
    vals = scale * np.fft.ifft(np.fft.ifftshift(_sign_k(g) * uhat.values))
    return GridFunction(g, vals, "x")


# elementary operators


def modulate(u: GridFunction, freq: float) -> GridFunction:
    """``exp(i freq x) u(x)``."""
    if not _on_lattice(freq, u.grid.dxi):
        warnings.warn(
            f"modulation frequency {freq} is off the lattice; aliasing risk",
            AliasingWarning,
            stacklevel=2,
        )
    return GridFunction(u.grid, np.exp(1j * freq * u.grid.x) * u.values)


def shift(u: GridFunction, s: float) -> GridFunction:
    """``u(x + s)``: a sample roll on the lattice, a Fourier phase ramp off it."""
    g = u.grid
    q = s / g.dx
    if _on_lattice(s, g.dx):
        return GridFunction(g, np.roll(u.values, -int(round(q))))
    uhat = dft_forward(u)
    return dft_inverse(GridFunction(g, np.exp(1j * s * g.xi) * uhat.values, "xi"))


def reflect(u: GridFunction) -> GridFunction:
    """``u(-x)``; exact because ``-x_m = x_{N-m}`` modulo the period."""
    return GridFunction(u.grid, np.roll(u.values[::-1], 1))


def apply_mult(f, u: GridFunction) -> GridFunction:
    """Pointwise product; ``f`` is a GridFunction, array or callable of x."""
    if isinstance(f, GridFunction):
        _same_grid(u, f)
        fv = f.values
    elif callable(f):
        fv = np.asarray(f(u.grid.x), dtype=complex)
    else:
        fv = np.asarray(f, dtype=complex)
    return GridFunction(u.grid, fv * u.values)


def apply_fourier_multiplier(g, u: GridFunction) -> GridFunction:
    """``F^-1 (g F u)`` with ``g`` sampled on the frequency lattice.

    ``g`` may be a GridFunction in the ``xi`` domain, an array ordered like
    ``grid.xi``, or a callable of xi.
    """
    if isinstance(g, GridFunction):
        if g.grid != u.grid or g.domain != "xi":
            raise GridMismatch("multiplier must live on the same frequency lattice")
        gv = g.values
    elif callable(g):
        gv = np.asarray(g(u.grid.xi), dtype=complex)
    else:
        gv = np.asarray(g, dtype=complex)
    uhat = dft_forward(u)
    return dft_inverse(GridFunction(u.grid, gv * uhat.values, "xi"))


def apply_M(p: PhasePoint, u: GridFunction) -> GridFunction:
    """``M(x0, xi0) u(x) = exp(i (x0 x + x0 xi0 / 2)) u(x + xi0)``."""
    v = modulate(shift(u, p.xi0), p.x0)
    return v * np.exp(0.5j * p.t)


def apply_T(p: PhasePoint, u: GridFunction) -> GridFunction:
    """Heisenberg operator ``T(x0, xi0) = M(xi0, -x0)``."""
    return apply_M(PhasePoint(p.xi0, -p.x0), u)


def apply_R(p: PhasePoint, u: GridFunction) -> GridFunction:
    """Grossmann-Royer reflection ``exp(2i xi0 (x - x0)) u(2 x0 - x)``."""
    v = shift(reflect(u), -2 * p.x0)
    v = modulate(v, 2 * p.xi0)
    return v * np.exp(-2j * p.xi0 * p.x0)


def apply_bj_planewave(p: PhasePoint, u: GridFunction) -> GridFunction:
    """Born-Jordan operator of ``exp(i (x0 x + xi0 xi))``: ``sinc(t/2) M(p)``."""
    return apply_M(p, u) * sinc(p.t / 2)


def apply_tau_planewave(p: PhasePoint, tau: float, u: GridFunction) -> GridFunction:
    """Shubin-tau operator of a plane wave: ``exp(+(i/2)(2 tau - 1) t) M(p)``."""
    phase = np.exp(TAU_PHASE_SIGN * 0.5j * (2 * tau - 1) * p.t)
    return apply_M(p, u) * phase


def apply_bj_bandlimited(c: Mapping[PhasePoint, complex], u: GridFunction) -> GridFunction:
    """Born-Jordan operator of ``sum_p c[p] exp(i (x0 x + xi0 xi))``.

    Terms are summed in sorted phase-point order so the result does not
    depend on the mapping's iteration order.
    """
    out = np.zeros(u.grid.N, dtype=complex)
    for p in sorted(c, key=lambda q: (q.x0, q.xi0)):
        if not p.is_commensurate(u.grid):
            raise CommensurabilityError(f"{p} is not on the grid lattice")
        out = out + complex(c[p]) * apply_bj_planewave(p, u).values
    return GridFunction(u.grid, out)


def commutator_apply(
    A: Callable[[GridFunction], GridFunction],
    B: Callable[[GridFunction], GridFunction],
    u: GridFunction,
) -> GridFunction:
    """``A(B u) - B(A u)``."""
    return A(B(u)) - B(A(u))


# operator factories for commutator_apply


def modulation_op(x0: float):
    return lambda u: modulate(u, x0)


def shift_op(xi0: float):
    """Fourier multiplier ``exp(i xi0 xi)``, i.e. the shift ``u(x + xi0)``."""
    return lambda u: apply_fourier_multiplier(lambda xi: np.exp(1j * xi0 * xi), u)


# test vectors


def gaussian(grid: Grid) -> GridFunction:
    """``exp(-x^2 / 2)``; its L2 norm on the line is ``pi^(1/4)``."""
    return GridFunction(grid, np.exp(-grid.x**2 / 2))


def hermite1(grid: Grid) -> GridFunction:
    """``x exp(-x^2 / 2)``."""
    x = grid.x
    return GridFunction(grid, x * np.exp(-x**2 / 2))


def planewave(grid: Grid, k: int) -> GridFunction:
    """``exp(i xi_k x)`` at lattice frequency ``xi_k = 2 pi k / L``."""
    return GridFunction(grid, np.exp(1j * k * grid.dxi * grid.x))
