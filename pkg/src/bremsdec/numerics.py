"""Quadrature and root-finding engine shared by the physics modules.

Owns the tolerance policy.  Integrands must accept numpy arrays
(vectorised evaluation); all routines are pure functions of their
arguments and bit-deterministic for fixed inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# 15-point Kronrod nodes on [-1, 1] and weights; the embedded 7-point
# Gauss rule lives on the odd-indexed nodes.
_XGK = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759,
    0.991455371120813,
])
_WGK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529,
])
_WG7 = np.zeros(15)
_WG7[1::2] = [
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870,
]

_MAX_INITIAL_PANELS = 2_000_000


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to converge.

    Carries the best estimate and its error bound in ``value`` and
    ``error_estimate``.
    """

    def __init__(self, message, value, error_estimate):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerance policy for the adaptive integrator."""

    rel_tol: float = 1e-9
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    oscillation_period_hint: float | None = None

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if (self.oscillation_period_hint is not None
                and self.oscillation_period_hint <= 0):
            raise ValueError("oscillation_period_hint must be positive")


DEFAULT_SPEC = QuadratureSpec()


def _eval_panels(f, lo, hi):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = mid[:, None] + half[:, None] * _XGK[None, :]
    y = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    k15 = half * (y * _WGK).sum(axis=1)
    g7 = half * (y * _WG7).sum(axis=1)
    err = np.abs(k15 - g7)
    return k15, err


def integrate_adaptive(f, a: float, b: float,
                       spec: QuadratureSpec = DEFAULT_SPEC):
    """Globally adaptive Gauss-Kronrod integration of ``f`` on [a, b].

    When ``oscillation_period_hint`` is set the initial partition uses
    panels no wider than half a period, which keeps the embedded error
    estimate honest for oscillatory integrands.  Returns
    ``(value, error_estimate)``; raises :class:`QuadratureError` with
    the best estimate attached when the subdivision budget is exhausted.
    """
    if not (a < b) or not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"need finite a < b, got [{a}, {b}]")

    if spec.oscillation_period_hint is not None:
        width = 0.5 * spec.oscillation_period_hint
        n0 = int(math.ceil((b - a) / width))
        if n0 > _MAX_INITIAL_PANELS:
            raise ValueError(
                f"interval spans {n0} oscillation half-periods; "
                "reduce the range or use a closed form")
        n0 = max(n0, 1)
    else:
        n0 = 8

    edges = np.linspace(a, b, n0 + 1)
    lo, hi = edges[:-1], edges[1:]
    vals, errs = _eval_panels(f, lo, hi)
    used = 0

    while True:
        total = float(vals.sum())
        total_err = float(errs.sum())
        tol = max(spec.rel_tol * abs(total), spec.abs_tol)
        if total_err <= tol:
            return total, total_err

        # batch split: every panel above its fair share of the budget
        share = 0.5 * tol / len(errs)
        mask = errs > share
        if not mask.any():
            mask = errs >= errs.max()
        n_split = int(mask.sum())
        if used + n_split > spec.max_subdivisions:
            raise QuadratureError(
                f"no convergence after {used} subdivisions "
                f"(estimate {total!r} +- {total_err!r})",
                total, total_err)
        used += n_split

        keep_lo, keep_hi = lo[~mask], hi[~mask]
        keep_vals, keep_errs = vals[~mask], errs[~mask]
        mid = 0.5 * (lo[mask] + hi[mask])
        new_lo = np.concatenate([lo[mask], mid])
        new_hi = np.concatenate([mid, hi[mask]])
        new_vals, new_errs = _eval_panels(f, new_lo, new_hi)

        lo = np.concatenate([keep_lo, new_lo])
        hi = np.concatenate([keep_hi, new_hi])
        vals = np.concatenate([keep_vals, new_vals])
        errs = np.concatenate([keep_errs, new_errs])
        order = np.argsort(lo, kind="stable")
        lo, hi, vals, errs = lo[order], hi[order], vals[order], errs[order]


# --- exponentially weighted half-line integrals ----------------------

_HALFLINE_S_MAX = 40.0


def _halfline_rule(panel_width: float):
    """Composite 15-point Gauss-Legendre nodes/weights on [0, 40].

    The returned weights include the exp(-s) damping factor, so
    ``(w * f(s)).sum()`` approximates the half-line integral directly.
    """
    n_panels = max(8, min(400, int(math.ceil(_HALFLINE_S_MAX / panel_width))))
    xg, wg = np.polynomial.legendre.leggauss(15)
    edges = np.linspace(0.0, _HALFLINE_S_MAX, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])[:, None]
    half = 0.5 * (edges[1:] - edges[:-1])[:, None]
    s = (mid + half * xg[None, :]).ravel()
    w = (half * wg[None, :]).ravel() * np.exp(-s)
    return s, w


_DEFAULT_HALFLINE = _halfline_rule(2.0)


def halfline_rule(decay_scale: float = 1.0):
    """Fixed high-order rule for integrals of the form e^{-s} f(s) ds.

    ``decay_scale`` is the characteristic variation scale of ``f`` in s;
    panels are narrowed accordingly so that rapidly varying integrands
    stay resolved.
    """
    if decay_scale <= 0:
        raise ValueError("decay_scale must be positive")
    if decay_scale >= 2.0:
        return _DEFAULT_HALFLINE
    return _halfline_rule(min(2.0, decay_scale))


def integrate_halfline_decaying(f, decay_scale: float = 1.0,
                                spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Compute the exponentially damped half-line integral of ``f``.

    Evaluates ``int_0^inf e^{-s} f(s) ds`` by a fixed high-order rule on
    [0, 40]; the truncated tail is bounded by e^{-40} sup|f|.  A growth
    check rejects integrands for which the damped product still grows
    toward the truncation point.
    """
    s, w = halfline_rule(decay_scale)
    y = np.asarray(f(s), dtype=float)
    damped = np.abs(y) * np.exp(-s)
    early = damped[s < 20.0].max()
    late = damped[s > 38.0].max()
    value = float((w * y).sum())
    if late > max(early, 10.0 * spec.abs_tol):
        raise ValueError(
            "integrand grows against the e^{-s} damping; "
            "half-line integral is divergent or untruncatable")
    return value


# --- cubic roots -----------------------------------------------------


def solve_cubic(c3: float, c2: float, c1: float, c0: float) -> np.ndarray:
    """All three roots of c3 z^3 + c2 z^2 + c1 z + c0.

    Roots are Newton-polished and sorted lexicographically by
    (real part, imaginary part); for real coefficients the complex pair
    is exactly conjugate.  Raises ``ValueError`` for c3 = 0 and
    ``ArithmeticError`` if a polished root fails the residual check.
    """
    if c3 == 0:
        raise ValueError("leading coefficient is zero: not a cubic")
    coeffs = np.array([c3, c2, c1, c0], dtype=complex)
    roots = np.roots(coeffs)

    dcoeffs = np.array([3 * c3, 2 * c2, c1], dtype=complex)
    for _ in range(4):
        p = np.polyval(coeffs, roots)
        dp = np.polyval(dcoeffs, roots)
        step = np.where(dp != 0, p / np.where(dp != 0, dp, 1.0), 0.0)
        roots = roots - step

    if (np.isreal([c3, c2, c1, c0])).all():
        a, b, c, d = float(c3), float(c2), float(c1), float(c0)
        disc = (18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2
                - 4 * a * c**3 - 27 * a**2 * d**2)
        if disc >= 0:
            roots = roots.real.astype(complex)
        else:
            # one real root and an exactly conjugate pair
            idx = np.argsort(np.abs(roots.imag))
            real_root = roots[idx[0]].real
            pair = roots[idx[1:]]
            w = 0.5 * (pair[0] + np.conj(pair[1]))
            if w.imag < 0:
                w = np.conj(w)
            roots = np.array([complex(real_root), w, np.conj(w)])

    order = np.lexsort((roots.imag, roots.real))
    roots = roots[order]

    scale = max(abs(c3) * np.abs(roots).max()**3, abs(c2), abs(c1), abs(c0))
    resid = np.abs(np.polyval(coeffs, roots))
    if scale > 0 and (resid > 1e-10 * scale).any():
        raise ArithmeticError(
            f"cubic root residuals {resid} exceed tolerance at scale {scale}")
    return roots
