"""Barrier potentials V(x), their derivatives, and the local k**2.

Units: hbar**2 / 2m = 1 throughout the package, so the squared local
wavenumber is simply k2(x) = E - V(x). k2 < 0 inside the classically
forbidden region.

Built-in families:

* parabolic : V(x) = V0 - x**2 (inverted parabola, finite window only)
* sech2     : V(x) = V0 * sech(x/w)**2
* gaussian  : V(x) = V0 * exp(-x**2 / w**2)
* square    : V(x) = V0 for |x| <= L/2, else 0 (oracle calibration only;
              it has no derivative at the edges, so every Airy-method
              operation rejects it)

Tabulated potentials come from two-column text files and are interpolated
with a natural cubic spline, which is C2 and therefore smooth enough for
the turning-point slope limits.

All potential objects are immutable after construction and their
evaluation methods are pure, so they are safe to share across threads.
"""

import io
import math
from abc import ABC, abstractmethod
from pathlib import Path

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import FormatError, NonSmoothError, RangeError


def _check_param(name, value):
    value = float(value)
    if not math.isfinite(value):
        raise ValueError("%s must be finite, got %r" % (name, value))
    return value


def _check_positive(name, value):
    value = _check_param(name, value)
    if value <= 0.0:
        raise ValueError("%s must be > 0, got %g" % (name, value))
    return value


class Potential(ABC):
    """A 1D barrier potential. Subclasses are immutable and stateless."""

    #: False only for potentials with jump discontinuities.
    smooth = True

    @abstractmethod
    def v(self, x):
        """V(x); accepts scalars or numpy arrays."""

    @abstractmethod
    def v_prime(self, x):
        """dV/dx; raises NonSmoothError for non-differentiable families."""

    def wavenumber_sq(self, energy, x):
        """k2(x) = E - V(x), negative inside the forbidden region."""
        return energy - self.v(x)

    @abstractmethod
    def suggested_window(self):
        """Default (xmin, xmax) bracketing the barrier for this potential."""


class ParabolicBarrier(Potential):
    """Inverted parabola V(x) = V0 - x**2.

    Unbounded below, so it only makes sense on a finite window around the
    top; the scattering oracle cannot be applied to it.
    """

    def __init__(self, v0):
        self.v0 = _check_positive("v0", v0)

    def v(self, x):
        return self.v0 - np.asarray(x, dtype=float) ** 2 if np.ndim(x) else self.v0 - float(x) ** 2

    def v_prime(self, x):
        return -2.0 * (np.asarray(x, dtype=float) if np.ndim(x) else float(x))

    def suggested_window(self):
        half = 1.5 * math.sqrt(self.v0)
        return (-half, half)

    def __repr__(self):
        return "ParabolicBarrier(v0=%g)" % self.v0


def _sech(z):
    # 2 e^{-|z|} / (1 + e^{-2|z|}) never overflows, unlike 1/cosh.
    a = np.abs(z)
    e = np.exp(-a)
    return 2.0 * e / (1.0 + e * e)


class Sech2Barrier(Potential):
    """Poschl-Teller barrier V(x) = V0 * sech(x/w)**2."""

    def __init__(self, v0, w):
        self.v0 = _check_positive("v0", v0)
        self.w = _check_positive("w", w)

    def v(self, x):
        z = np.asarray(x, dtype=float) / self.w
        out = self.v0 * _sech(z) ** 2
        return out if np.ndim(x) else float(out)

    def v_prime(self, x):
        z = np.asarray(x, dtype=float) / self.w
        out = -2.0 * self.v0 / self.w * _sech(z) ** 2 * np.tanh(z)
        return out if np.ndim(x) else float(out)

    def suggested_window(self):
        return (-20.0 * self.w, 20.0 * self.w)

    def __repr__(self):
        return "Sech2Barrier(v0=%g, w=%g)" % (self.v0, self.w)


class GaussianBarrier(Potential):
    """Gaussian bump V(x) = V0 * exp(-x**2 / w**2)."""

    def __init__(self, v0, w):
        self.v0 = _check_positive("v0", v0)
        self.w = _check_positive("w", w)

    def v(self, x):
        z = np.asarray(x, dtype=float) / self.w
        out = self.v0 * np.exp(-z * z)
        return out if np.ndim(x) else float(out)

    def v_prime(self, x):
        xa = np.asarray(x, dtype=float)
        z = xa / self.w
        out = self.v0 * np.exp(-z * z) * (-2.0 * xa / self.w ** 2)
        return out if np.ndim(x) else float(out)

    def suggested_window(self):
        return (-20.0 * self.w, 20.0 * self.w)

    def __repr__(self):
        return "GaussianBarrier(v0=%g, w=%g)" % (self.v0, self.w)


class SquareBarrier(Potential):
    """Rectangular barrier V = V0 on |x| <= L/2.

    Exists to calibrate the exact solver against the textbook closed form;
    the slope limits at its edges do not exist, so the Airy-method
    operations reject it via NonSmoothError.
    """

    smooth = False

    def __init__(self, v0, length):
        self.v0 = _check_positive("v0", v0)
        self.length = _check_positive("length", length)

    def v(self, x):
        inside = np.abs(np.asarray(x, dtype=float)) <= 0.5 * self.length
        out = np.where(inside, self.v0, 0.0)
        return out if np.ndim(x) else float(out)

    def v_prime(self, x):
        raise NonSmoothError("square barrier has no derivative at its edges")

    def suggested_window(self):
        return (-2.5 * self.length, 2.5 * self.length)

    def __repr__(self):
        return "SquareBarrier(v0=%g, length=%g)" % (self.v0, self.length)


class TabulatedPotential(Potential):
    """Potential defined by (x, V) samples with cubic-spline interpolation.

    Natural boundary conditions; the derivative comes from the spline
    polynomial itself. Evaluation outside the sampled range raises
    RangeError rather than extrapolating, since extrapolated tails would
    silently corrupt action integrals.
    """

    def __init__(self, x, v):
        x = np.asarray(x, dtype=float)
        v = np.asarray(v, dtype=float)
        if x.ndim != 1 or x.shape != v.shape:
            raise FormatError("x and V must be 1D arrays of equal length")
        if x.size < 4:
            raise FormatError("tabulated potential needs at least 4 samples, got %d" % x.size)
        if not np.all(np.isfinite(x)) or not np.all(np.isfinite(v)):
            raise FormatError("tabulated potential contains non-finite values")
        if not np.all(np.diff(x) > 0):
            raise FormatError("tabulated x values must be strictly increasing")
        self.x_samples = x.copy()
        self.v_samples = v.copy()
        self.x_samples.flags.writeable = False
        self.v_samples.flags.writeable = False
        self._spline = CubicSpline(x, v, bc_type="natural")
        self._spline_d = self._spline.derivative()
        self._tol = 1e-12 * (x[-1] - x[0])

    def _check_range(self, x):
        xa = np.asarray(x, dtype=float)
        lo, hi = self.x_samples[0], self.x_samples[-1]
        if np.any(xa < lo - self._tol) or np.any(xa > hi + self._tol):
            raise RangeError(
                "x outside tabulated range [%g, %g]" % (lo, hi)
            )
        return xa

    def v(self, x):
        xa = self._check_range(x)
        out = self._spline(xa)
        return out if np.ndim(x) else float(out)

    def v_prime(self, x):
        xa = self._check_range(x)
        out = self._spline_d(xa)
        return out if np.ndim(x) else float(out)

    def suggested_window(self):
        return (float(self.x_samples[0]), float(self.x_samples[-1]))

    def __repr__(self):
        return "TabulatedPotential(%d samples on [%g, %g])" % (
            self.x_samples.size,
            self.x_samples[0],
            self.x_samples[-1],
        )


def load_tabulated(source):
    """Parse a two-column potential file into a TabulatedPotential.

    ``source`` may be a path, a text or byte string, or a file-like
    object. Format: one ``x V`` pair per line, separated by whitespace or
    commas; lines starting with ``#`` and blank lines are ignored; x must
    be strictly increasing, at least 4 rows.
    """
    if isinstance(source, (str, Path)) and "\n" not in str(source):
        text = Path(source).read_text()
    elif isinstance(source, str):
        text = source
    elif isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    else:
        raise FormatError("unsupported tabulated-potential source %r" % type(source))

    xs = []
    vs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.replace(",", " ").split()
        if len(tokens) != 2:
            raise FormatError("line %d: expected two fields, got %d" % (lineno, len(tokens)))
        try:
            x_val = float(tokens[0])
            v_val = float(tokens[1])
        except ValueError:
            raise FormatError("line %d: non-numeric token in %r" % (lineno, line)) from None
        xs.append(x_val)
        vs.append(v_val)
    return TabulatedPotential(np.array(xs), np.array(vs))


_FAMILIES = {
    "parabolic": ParabolicBarrier,
    "sech2": Sech2Barrier,
    "gaussian": GaussianBarrier,
    "square": SquareBarrier,
}


def make_potential(family, **params):
    """Construct a built-in family by name (used by the CLI)."""
    try:
        cls = _FAMILIES[family]
    except KeyError:
        raise ValueError(
            "unknown family %r; choose from %s" % (family, sorted(_FAMILIES))
        ) from None
    return cls(**params)
