"""Certified maximization over the unit circle.

Both quantities computed here have the form

    sup over theta of f(theta),   f(theta) = || Re(e^{i theta} M) ||

(the module radius Omega(x) is this with M = r_x, since the off-diagonal
linking element [[0, conj(lambda) l_x], [lambda r_x, 0]] equals
2 Re(lambda r_x)). Such an f is the support function of the
symmetric convex set conv(W(M) u -W(M)), so if the maximizing direction lies
between two sampled angles t1 < t2 the true sup w obeys

    w cos(t - t1) <= f(t1)   and   w cos(t2 - t) <= f(t2)

for some t in [t1, t2]. Maximizing the smaller of the two implied bounds over
t gives a sound per-interval upper bound. It is combined with the plain
Lipschitz bound (f is ||M||-Lipschitz) and the smaller one is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import NotSquare
from .linalg import as_cmatrix, operator_norm
from .linking import assemble, check_unit, embed_l, embed_r
from .module import ModuleElement, module_norm

TWO_PI = 2.0 * math.pi
PERIOD = math.pi
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_EPS = np.finfo(float).eps
_CHUNK = 16384


@dataclass(frozen=True)
class RadiusConfig:
    grid_points: int = 1024
    refine_tol: float = 1e-10
    max_refine_iters: int = 200

    def __post_init__(self):
        if self.grid_points < 8:
            raise ValueError("grid_points must be >= 8")
        if not self.refine_tol > 0:
            raise ValueError("refine_tol must be > 0")
        if self.max_refine_iters < 1:
            raise ValueError("max_refine_iters must be >= 1")


@dataclass(frozen=True)
class RadiusResult:
    """value <= true sup <= value + certificate."""

    value: float
    argmax_theta: float
    certificate: float
    profile_samples: Optional[list] = None
    evaluations: int = 0


def re_part(lam: complex, M) -> np.ndarray:
    """Re(lam M) = (lam M + conj(lam) M*) / 2."""
    M = as_cmatrix(M)
    if M.shape[0] != M.shape[1]:
        raise NotSquare(f"expected a square matrix, got {M.shape}")
    lam = check_unit(lam)
    return 0.5 * (lam * M + lam.conjugate() * M.conj().T)


def _hermitian_norms(stack: np.ndarray) -> np.ndarray:
    eig = np.linalg.eigvalsh(stack)
    return np.maximum(np.abs(eig[:, 0]), np.abs(eig[:, -1]))


def _re_part_objective(M: np.ndarray) -> Callable[[np.ndarray], np.ndarray]:
    Mh = M.conj().T

    def f(thetas):
        thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
        out = np.empty(thetas.shape[0])
        for start in range(0, thetas.shape[0], _CHUNK):
            lam = np.exp(1j * thetas[start : start + _CHUNK])[:, None, None]
            out[start : start + _CHUNK] = _hermitian_norms(0.5 * (lam * M + lam.conj() * Mh))
        return out

    return f


def _omega_objective(x: ModuleElement) -> Callable[[np.ndarray], np.ndarray]:
    lower = assemble(embed_r(x))
    upper = assemble(embed_l(x))

    def f(thetas):
        thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
        out = np.empty(thetas.shape[0])
        for start in range(0, thetas.shape[0], _CHUNK):
            lam = np.exp(1j * thetas[start : start + _CHUNK])[:, None, None]
            out[start : start + _CHUNK] = 0.5 * _hermitian_norms(lam * lower + lam.conj() * upper)
        return out

    return f


def interval_upper_bounds(f1, f2, h, lipschitz: float) -> np.ndarray:
    """Upper bound on sup f over each sampled interval of width h."""
    f1 = np.asarray(f1, dtype=float)
    f2 = np.asarray(f2, dtype=float)
    h = np.broadcast_to(np.asarray(h, dtype=float), f1.shape)
    t = np.clip(np.arctan2(f2 - f1 * np.cos(h), f1 * np.sin(h)), 0.0, h)
    support = np.minimum(f1 / np.cos(t), f2 / np.cos(h - t))
    lip = 0.5 * (f1 + f2 + lipschitz * h)
    return np.minimum(support, lip)


def _golden_max(f, lo: float, hi: float, tol: float, max_iter: int):
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = f(c)[0], f(d)[0]
    evals = 2
    while hi - lo > tol and evals < max_iter:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)[0]
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)[0]
        evals += 1
    if fc >= fd:
        return c, fc, evals
    return d, fd, evals


def certified_circle_max(
    f: Callable[[np.ndarray], np.ndarray],
    lipschitz: float,
    cfg: RadiusConfig,
    keep_profile: bool = False,
) -> RadiusResult:
    """Maximize a support-function objective on the circle with a certificate.

    ``||Re(-lambda M)|| = ||Re(lambda M)||`` so f has period pi; only
    [0, pi) is sampled, at the spacing 2 pi / grid_points. Steps: uniform
    grid, golden-section polish of the best grid cell, then bisection of every
    interval whose upper bound still beats the best value by more than the
    target. Refinement stops when the certificate meets
    ``refine_tol * (1 + value)``, after ``max_refine_iters`` rounds, or when
    more than an eighth of the grid cells remain open; that only happens on
    (near-)flat profiles, where bisection cannot tighten the bound locally.
    """
    half = (cfg.grid_points + 1) // 2
    h0 = PERIOD / half
    grid = h0 * np.arange(half)
    grid_vals = f(grid)
    evaluations = half

    i0 = int(np.argmax(grid_vals))
    t_star, f_star, used = _golden_max(
        f, grid[i0] - h0, grid[i0] + h0, tol=1e-3 * h0, max_iter=max(8, cfg.max_refine_iters)
    )
    evaluations += used
    thetas, values = grid, grid_vals
    if f_star > grid_vals[i0]:
        thetas = np.append(thetas, t_star % PERIOD)
        values = np.append(values, f_star)
        order = np.argsort(thetas, kind="stable")
        thetas, values = thetas[order], values[order]

    max_open = max(4, half // 4)
    for _ in range(cfg.max_refine_iters):
        best = float(values.max())
        widths = np.diff(np.append(thetas, thetas[0] + PERIOD))
        ub = interval_upper_bounds(values, np.roll(values, -1), widths, lipschitz)
        target = cfg.refine_tol * (1.0 + best)
        if float(ub.max()) - best <= target:
            break
        open_ = np.nonzero(ub - best > 0.5 * target)[0]
        if open_.size > max_open:
            break
        mids = (thetas[open_] + 0.5 * widths[open_]) % PERIOD
        evaluations += mids.size
        thetas = np.concatenate([thetas, mids])
        values = np.concatenate([values, f(mids)])
        order = np.argsort(thetas, kind="stable")
        thetas, values = thetas[order], values[order]

    best = float(values.max())
    widths = np.diff(np.append(thetas, thetas[0] + PERIOD))
    ub = interval_upper_bounds(values, np.roll(values, -1), widths, lipschitz)
    rounding = 64.0 * _EPS * (1.0 + best)
    certificate = float(max(float(ub.max()) - best, 0.0) + rounding)

    # Smallest angle attaining the max; ties within a few ulps count as equal.
    tied = np.nonzero(values >= best - 4.0 * _EPS * (1.0 + best))[0]
    argmax_theta = float(thetas[tied[0]])

    profile = None
    if keep_profile:
        full = np.concatenate([grid, grid + PERIOD])
        profile = list(zip(full.tolist(), np.concatenate([grid_vals, grid_vals]).tolist()))
    return RadiusResult(best, argmax_theta, certificate, profile, evaluations)


def numerical_radius(M, cfg: Optional[RadiusConfig] = None, keep_profile: bool = False) -> RadiusResult:
    """w(M) = sup over unit lambda of ||Re(lambda M)||."""
    M = as_cmatrix(M)
    if M.shape[0] != M.shape[1]:
        raise NotSquare(f"expected a square matrix, got {M.shape}")
    cfg = cfg or RadiusConfig()
    return certified_circle_max(_re_part_objective(M), operator_norm(M), cfg, keep_profile)


def numerical_radius_bruteforce(M, samples: int) -> float:
    """Max of ||Re(e^{i theta} M)|| over a uniform grid; no refinement."""
    M = as_cmatrix(M)
    if M.shape[0] != M.shape[1]:
        raise NotSquare(f"expected a square matrix, got {M.shape}")
    if samples < 16:
        raise ValueError("samples must be >= 16")
    thetas = TWO_PI * np.arange(samples) / samples
    return float(_re_part_objective(M)(thetas).max())


def omega(x: ModuleElement, cfg: Optional[RadiusConfig] = None, keep_profile: bool = False) -> RadiusResult:
    """Omega(x): half the sup over unit lambda of the linking norm of
    [[0, conj(lambda) l_x], [lambda r_x, 0]]."""
    cfg = cfg or RadiusConfig()
    return certified_circle_max(_omega_objective(x), module_norm(x), cfg, keep_profile)


def omega_via_w(x: ModuleElement, cfg: Optional[RadiusConfig] = None) -> RadiusResult:
    """Omega(x) computed as the numerical radius of the assembled r_x."""
    return numerical_radius(assemble(embed_r(x)), cfg)
