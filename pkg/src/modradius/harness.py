"""Seeded randomized verification of the Omega inequalities.

Every check returns a :class:`CheckOutcome` whose ``worst_margin`` is the
smallest slack observed, tolerance included: a margin below zero is a
violation. For an inequality ``lhs <= rhs`` evaluated with certified radius
values (``value <= true <= value + certificate``) the slack is
``rhs_upper - lhs_value + tol`` where ``rhs_upper`` uses value + certificate.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

import numpy as np

from . import __version__
from .errors import NotSquare, ShapeMismatch
from .linalg import (
    Sym2x2,
    as_cmatrix,
    derive_seed,
    operator_norm,
    random_ginibre,
    rng_for,
    spectral_radius,
    sym2x2_norm,
)
from .linking import (
    adjoint_linking,
    assemble,
    block_diag_corner,
    embed_l,
    embed_r,
    embed_T,
    embed_theta,
    linking_norm,
    omega_element,
    product_identity_errors,
    sign_variant,
)
from .module import AlgebraElement, ModuleElement, ModuleShape, inner_product, module_action, module_norm
from .radius import RadiusConfig, RadiusResult, omega, omega_via_w

DEFAULT_SHAPES = (ModuleShape(1, 1), ModuleShape(1, 3), ModuleShape(2, 2), ModuleShape(3, 2), ModuleShape(4, 4))
DEFAULT_SCALES = (2j, -1.5 + 0.5j)
IMPLIED_TOL_FACTOR = 10.0
DEGENERACY_TOL = 1e-9
IMPROVEMENT_TOL = 1e-9
CROSS_TOL = 1e-10
IDENTITY_TOL = 1e-11
CORNER_TOL = 1e-13
SELF_ADJOINT_TOL = 1e-15
SUM_BOUND_SIZES = (2, 3, 4, 5, 6)
SUM_BOUND_PAIRS_PER_TRIAL = 2

CHECK_NAMES = (
    "norm_axioms",
    "sandwich_bounds",
    "sandwich_lower_tightness",
    "lower_bound_refinement",
    "refinement_degeneracy",
    "half_norm_equality_condition",
    "hermitian_part_scaling",
    "spectral_radius_sum_bound",
    "refined_triangle",
    "refined_triangle_equality_chain",
    "triangle_equality_consequence",
    "engine_cross_validation",
    "kernel_identities",
)


@dataclass(frozen=True)
class TrialConfig:
    shape: ModuleShape = ModuleShape(1, 1)
    trials: int = 200
    master_seed: int = 0
    radius_cfg: RadiusConfig = field(default_factory=RadiusConfig)
    tol: float = 1e-8
    scale_samples: tuple = DEFAULT_SCALES

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class RefinementTerms:
    gamma: float
    gamma_prime: float
    delta: float
    delta_prime: float
    lower_bound: float


@dataclass
class CheckOutcome:
    name: str
    trials: int
    violations: int
    worst_margin: float
    witness_seed: Optional[int] = None
    stats: dict = field(default_factory=dict)

    def merge(self, other: "CheckOutcome") -> "CheckOutcome":
        """Combine two outcomes; the earlier one wins margin ties."""
        if other.worst_margin < self.worst_margin:
            margin, witness = other.worst_margin, other.witness_seed
        else:
            margin, witness = self.worst_margin, self.witness_seed
        stats = dict(self.stats)
        for key, value in other.stats.items():
            if key not in stats:
                stats[key] = value
            elif key.startswith("max_"):
                stats[key] = max(stats[key], value)
            elif key.startswith("min_"):
                stats[key] = min(stats[key], value)
            else:
                stats[key] += value
        return CheckOutcome(self.name, self.trials + other.trials, self.violations + other.violations, margin, witness, stats)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "witness_seed": self.witness_seed,
        }


@dataclass
class SuiteReport:
    config: dict
    outcomes: list
    passed: bool
    version: str = __version__

    def outcome(self, name: str) -> CheckOutcome:
        for o in self.outcomes:
            if o.name == name:
                return o
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "outcomes": [o.to_dict() for o in self.outcomes],
            "passed": self.passed,
        }


def _outcome(name: str, margins: Iterable[float], seed: Optional[int] = None, **stats) -> CheckOutcome:
    worst = min(float(m) for m in margins)
    return CheckOutcome(name, 1, int(worst < 0.0), worst, seed, stats)


class OmegaCache:
    """Memoizes Omega results per module element within one trial."""

    def __init__(self, radius_cfg: RadiusConfig):
        self.radius_cfg = radius_cfg
        self._store: dict = {}

    def __call__(self, x: ModuleElement) -> RadiusResult:
        key = (x.shape, x.mat.tobytes())
        if key not in self._store:
            self._store[key] = omega(x, self.radius_cfg, keep_profile=True)
        return self._store[key]


def _cache(cfg: TrialConfig, cache: Optional[OmegaCache]) -> OmegaCache:
    return cache if cache is not None else OmegaCache(cfg.radius_cfg)


# ---------------------------------------------------------------------------
# Instances


def gen_instance(seed: int, shape: ModuleShape):
    """Ginibre (x, y, a) for one trial, each from its own derived seed."""
    x = ModuleElement(shape, random_ginibre(shape.m, shape.n, derive_seed(seed, "x")))
    y = ModuleElement(shape, random_ginibre(shape.m, shape.n, derive_seed(seed, "y")))
    a = AlgebraElement(shape, random_ginibre(shape.n, shape.n, derive_seed(seed, "a")))
    return x, y, a


def trial_seed(master_seed: int, shape: ModuleShape, index: int) -> int:
    return derive_seed(master_seed, f"trial/{shape.n}x{shape.m}/{index}")


# ---------------------------------------------------------------------------
# Checks


def check_norm_axioms(x, y, alpha, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    """Nonnegativity, definiteness, homogeneity and subadditivity of Omega."""
    om = _cache(cfg, cache)
    tol = cfg.tol
    ox, oy, oxy = om(x), om(y), om(x + y)
    margins = [ox.value + tol]
    if ox.value <= tol:
        # Omega(x) = 0 forces x = 0: ||x|| <= 2 Omega(x) quantitatively.
        margins.append(2.0 * (ox.value + ox.certificate) + tol - module_norm(x))
    alphas = [alpha] if np.isscalar(alpha) else list(alpha)
    for al in alphas:
        oax = om(complex(al) * x)
        gap = abs(oax.value - abs(al) * ox.value)
        margins.append(oax.certificate + abs(al) * ox.certificate + tol - gap)
    margins.append(ox.value + ox.certificate + oy.value + oy.certificate + tol - oxy.value)
    return _outcome("norm_axioms", margins, seed)


def check_sandwich(x, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    """1/2 ||x|| <= Omega(x) <= ||x||."""
    ox = _cache(cfg, cache)(x)
    nx = module_norm(x)
    lower = ox.value + ox.certificate + cfg.tol - 0.5 * nx
    upper = nx + cfg.tol - ox.value
    return _outcome("sandwich_bounds", [lower, upper], seed, max_lower_gap=ox.value - 0.5 * nx)


def check_sandwich_tightness(x, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    """Observed distance of Omega(x) from the lower bound 1/2 ||x||."""
    ox = _cache(cfg, cache)(x)
    gap = abs(ox.value - 0.5 * module_norm(x))
    return _outcome("sandwich_lower_tightness", [cfg.tol - gap], seed, max_gap=gap)


def refinement_terms(x: ModuleElement) -> RefinementTerms:
    nx = module_norm(x)
    plus = linking_norm(sign_variant(x, +1))
    minus = linking_norm(sign_variant(x, -1))
    gamma, gamma_p = max(nx, plus), max(nx, minus)
    delta, delta_p = abs(nx - plus), abs(nx - minus)
    lower = (4.0 * nx + 2.0 * abs(gamma - gamma_p) + delta + delta_p) / 8.0
    return RefinementTerms(gamma, gamma_p, delta, delta_p, lower)


def check_lower_bound_refinement(x, cfg: TrialConfig, cache=None, seed=None):
    ox = _cache(cfg, cache)(x)
    terms = refinement_terms(x)
    margins = [
        ox.value + ox.certificate + cfg.tol - terms.lower_bound,
        terms.lower_bound + cfg.tol - 0.5 * module_norm(x),
    ]
    return _outcome("lower_bound_refinement", margins, seed), terms


def check_refinement_degeneracy(terms: RefinementTerms, seed=None) -> CheckOutcome:
    """In the matrix model both sign variants have norm ||x||."""
    spread = max(terms.delta, terms.delta_prime, abs(terms.gamma - terms.gamma_prime))
    return _outcome("refinement_degeneracy", [DEGENERACY_TOL - spread], seed, max_spread=spread)


def check_half_norm_equality(x, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    """Omega(x) = ||x||/2  iff  the linking norm equals ||x|| on the whole lambda grid."""
    ox = _cache(cfg, cache)(x)
    nx = module_norm(x)
    lhs_gap = abs(ox.value - 0.5 * nx)
    rhs_gap = max(abs(2.0 * f - nx) for _, f in ox.profile_samples)
    lhs, rhs = lhs_gap <= cfg.tol, rhs_gap <= cfg.tol
    distance = min(abs(cfg.tol - lhs_gap), abs(cfg.tol - rhs_gap))
    margin = distance if lhs == rhs else -max(distance, cfg.tol)
    return _outcome("half_norm_equality_condition", [margin], seed, equality_cases=int(lhs and rhs))


def check_hermitian_part_scaling(x, a, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    """Omega(xa +- xa*) <= 2 ||a +- a*|| Omega(x), the coarser 4 ||a|| bound,
    and the Hermitian case Omega(xh) <= ||h + h*|| Omega(x)."""
    if x.shape.n != a.shape.n:
        raise ShapeMismatch("x and a have different algebra sizes")
    om = _cache(cfg, cache)
    tol = cfg.tol
    ox = om(x)
    upper_x = ox.value + ox.certificate
    a_star = a.adjoint()
    xa, xas = module_action(x, a), module_action(x, a_star)
    na = operator_norm(a.mat)
    n_plus = operator_norm(a.mat + a_star.mat)
    n_minus = operator_norm(a.mat - a_star.mat)
    o_plus, o_minus = om(xa + xas), om(xa - xas)

    h = AlgebraElement(a.shape, 0.5 * (a.mat + a_star.mat))
    xh = module_action(x, h)
    if not np.array_equal(xh.mat, module_action(x, h.adjoint()).mat):
        raise ArithmeticError("Hermitian part is not exactly self-adjoint")
    n_h = operator_norm(h.mat + h.adjoint().mat)
    o_h = om(xh)

    improvement = 4.0 * na * ox.value - 2.0 * n_plus * ox.value
    margins = [
        2.0 * n_plus * upper_x + tol - o_plus.value,
        2.0 * n_minus * upper_x + tol - o_minus.value,
        4.0 * na * upper_x + tol - o_plus.value,
        n_h * upper_x + tol - o_h.value,
        improvement + IMPROVEMENT_TOL,
    ]
    return _outcome(
        "hermitian_part_scaling", margins, seed, improvement_positive=int(improvement > 0.0), min_improvement=improvement
    )


def spectral_radius_sum_bound(A, B) -> float:
    A, B = as_cmatrix(A), as_cmatrix(B)
    return sym2x2_norm(Sym2x2(operator_norm(A), math.sqrt(operator_norm(A @ B)), operator_norm(B)))


def check_spectral_radius_sum_bound(A, B, tol: float = 1e-8, seed=None) -> CheckOutcome:
    """R(A + B) <= || [[||A||, ||AB||^(1/2)], [||AB||^(1/2), ||B||]] ||."""
    A, B = as_cmatrix(A), as_cmatrix(B)
    for M in (A, B):
        if M.shape[0] != M.shape[1]:
            raise NotSquare(f"expected a square matrix, got {M.shape}")
    if A.shape != B.shape:
        raise ShapeMismatch(f"{A.shape} vs {B.shape}")
    bound = spectral_radius_sum_bound(A, B)
    return _outcome("spectral_radius_sum_bound", [bound + tol - spectral_radius(A + B)], seed)


def triangle_terms(x, y, cache: OmegaCache):
    """(D, middle) for the refined triangle inequality, from radius values."""
    ox, oy = cache(x), cache(y)
    D = linking_norm(block_diag_corner(x, y))
    middle = sym2x2_norm(Sym2x2(ox.value, 0.5 * math.sqrt(D), oy.value))
    return D, middle


def check_refined_triangle(x, y, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    if x.shape != y.shape:
        raise ShapeMismatch(f"{x.shape} vs {y.shape}")
    om = _cache(cfg, cache)
    tol = cfg.tol
    ox, oy, oxy = om(x), om(y), om(x + y)
    ux, uy = ox.value + ox.certificate, oy.value + oy.certificate
    D, middle = triangle_terms(x, y, om)
    middle_upper = sym2x2_norm(Sym2x2(ux, 0.5 * math.sqrt(D), uy))
    margins = [
        middle_upper + tol - oxy.value,
        ux + uy + tol - middle,
        4.0 * ux * uy + tol - D,
    ]
    return _outcome("refined_triangle", margins, seed)


def check_refined_triangle_equality_chain(x, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    """For y = x: Omega(2x) = 2 Omega(x) = middle and D = ||x||^2 = 4 Omega(x)^2."""
    om = _cache(cfg, cache)
    ox, o2x = om(x), om(2 * x)
    D, middle = triangle_terms(x, x, om)
    nx = module_norm(x)
    gaps = [
        abs(o2x.value - 2.0 * ox.value),
        abs(middle - 2.0 * ox.value),
        abs(D - nx * nx),
        abs(D - 4.0 * ox.value * ox.value),
    ]
    return _outcome("refined_triangle_equality_chain", [cfg.tol - g for g in gaps], seed, max_gap=max(gaps))


def implied_tolerance(ox: RadiusResult, oy: RadiusResult, oxy: RadiusResult, tol: float) -> float:
    """Consequent tolerance for the equality-case implication.

    Base term 10 tol (1 + Omega(x) + Omega(y)), plus the error the radius
    certificates can induce: an antecedent gap d implies |D - 4 Ox Oy| <= 4 d (Ox + Oy).
    """
    base = IMPLIED_TOL_FACTOR * tol * (1.0 + ox.value + oy.value)
    c = ox.certificate + oy.certificate + oxy.certificate
    ux, uy = ox.value + ox.certificate, oy.value + oy.certificate
    cert_term = 4.0 * c * (ux + uy) + 4.0 * (ox.certificate * uy + oy.certificate * ux)
    return base + cert_term


def check_triangle_equality_consequence(x, y, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    """Omega(x + y) = Omega(x) + Omega(y)  implies  D = 4 Omega(x) Omega(y)."""
    if x.shape != y.shape:
        raise ShapeMismatch(f"{x.shape} vs {y.shape}")
    om = _cache(cfg, cache)
    ox, oy, oxy = om(x), om(y), om(x + y)
    antecedent_gap = abs(oxy.value - ox.value - oy.value)
    if antecedent_gap > cfg.tol:
        return _outcome("triangle_equality_consequence", [antecedent_gap - cfg.tol], seed, vacuous=1, antecedent_held=0)
    D = linking_norm(block_diag_corner(x, y))
    err = abs(D - 4.0 * ox.value * oy.value)
    implied = implied_tolerance(ox, oy, oxy, cfg.tol)
    return _outcome("triangle_equality_consequence", [implied - err], seed, vacuous=0, antecedent_held=1, max_consequent_error=err)


def check_engine_cross_validation(x, cfg: TrialConfig, cache=None, seed=None) -> CheckOutcome:
    """Omega(x) two ways: the linking-norm profile and w(r_x)."""
    ox = _cache(cfg, cache)(x)
    ow = omega_via_w(x, cfg.radius_cfg)
    slack = ox.certificate + ow.certificate + CROSS_TOL - abs(ox.value - ow.value)
    return _outcome("engine_cross_validation", [slack], seed)


def kernel_identity_errors(x, y, a, lam: complex) -> dict:
    """Tolerance-normalized identity residuals; each must stay <= its tolerance."""
    errs = {name: (e, IDENTITY_TOL) for name, e in product_identity_errors(x, y, a).items()}
    errs["r* = l"] = (float(np.max(np.abs(assemble(adjoint_linking(embed_r(y))) - assemble(embed_l(y))))), IDENTITY_TOL)

    e = embed_T(a) + embed_r(x) + embed_l(y) + embed_theta(x, y)
    for label, M in (("x", x.mat), ("a", a.mat), ("linking", assemble(e))):
        nm = operator_norm(M)
        errs[f"C*-identity {label}"] = (abs(nm * nm - operator_norm(M.conj().T @ M)), 1e-9 * max(nm * nm, 1e-300))
    b = inner_product(x, y).mat
    na, nb = operator_norm(a.mat), operator_norm(b)
    errs["submultiplicative"] = (max(operator_norm(a.mat @ b) - na * nb, 0.0), 1e-9 * max(na * nb, 1.0))

    A = assemble(omega_element(lam, x))
    B = assemble(omega_element(lam, y))
    errs["omega element self-adjoint"] = (float(np.max(np.abs(A - A.conj().T))), SELF_ADJOINT_TOL)
    AB = A @ B
    n = x.shape.n
    corners = max(float(np.max(np.abs(AB[:n, n:]))), float(np.max(np.abs(AB[n:, :n]))))
    errs["product corners"] = (corners, CORNER_TOL * max(1.0, float(np.max(np.abs(AB)))))
    errs["product = block diag"] = (float(np.max(np.abs(AB - assemble(block_diag_corner(x, y))))), IDENTITY_TOL)
    return errs


def check_kernel_identities(x, y, a, lam: complex = 1.0, seed=None) -> CheckOutcome:
    errs = kernel_identity_errors(x, y, a, lam)
    return _outcome("kernel_identities", [tol - err for err, tol in errs.values()], seed)


# ---------------------------------------------------------------------------
# Orchestration


def run_trial(seed: int, cfg: TrialConfig, checks: Optional[Sequence[str]] = None) -> dict:
    """All selected checks on the instance for one derived seed."""
    selected = set(CHECK_NAMES if checks is None else checks)
    unknown = selected - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    x, y, a = gen_instance(seed, cfg.shape)
    om = OmegaCache(cfg.radius_cfg)
    gen = rng_for(derive_seed(seed, "aux"))
    lam = complex(np.exp(1j * gen.uniform(0.0, 2.0 * math.pi)))
    out: dict = {}

    def add(outcome: CheckOutcome):
        if outcome.name in selected:
            out[outcome.name] = out[outcome.name].merge(outcome) if outcome.name in out else outcome

    if "norm_axioms" in selected:
        add(check_norm_axioms(x, y, cfg.scale_samples, cfg, om, seed))
    if "sandwich_bounds" in selected:
        add(check_sandwich(x, cfg, om, seed))
    if "sandwich_lower_tightness" in selected:
        add(check_sandwich_tightness(x, cfg, om, seed))
    if selected & {"lower_bound_refinement", "refinement_degeneracy"}:
        outcome, terms = check_lower_bound_refinement(x, cfg, om, seed)
        add(outcome)
        add(check_refinement_degeneracy(terms, seed))
    if "half_norm_equality_condition" in selected:
        add(check_half_norm_equality(x, cfg, om, seed))
    if "hermitian_part_scaling" in selected:
        add(check_hermitian_part_scaling(x, a, cfg, om, seed))
    if "spectral_radius_sum_bound" in selected:
        for k in range(SUM_BOUND_PAIRS_PER_TRIAL):
            size = SUM_BOUND_SIZES[derive_seed(seed, f"sumbound/{k}/size") % len(SUM_BOUND_SIZES)]
            A = random_ginibre(size, size, derive_seed(seed, f"sumbound/{k}/A"))
            B = random_ginibre(size, size, derive_seed(seed, f"sumbound/{k}/B"))
            outcome = check_spectral_radius_sum_bound(A, B, cfg.tol, seed)
            outcome.stats.update(random_pairs=1, structured_pairs=0)
            add(outcome)
        outcome = check_spectral_radius_sum_bound(
            assemble(omega_element(lam, x)), assemble(omega_element(lam, y)), cfg.tol, seed
        )
        outcome.stats.update(random_pairs=0, structured_pairs=1)
        add(outcome)
    if "refined_triangle" in selected:
        add(check_refined_triangle(x, y, cfg, om, seed))
    if "refined_triangle_equality_chain" in selected:
        add(check_refined_triangle_equality_chain(x, cfg, om, seed))
    if "triangle_equality_consequence" in selected:
        add(check_triangle_equality_consequence(x, y, cfg, om, seed))
        add(check_triangle_equality_consequence(x, x, cfg, om, seed))
    if "engine_cross_validation" in selected:
        add(check_engine_cross_validation(x, cfg, om, seed))
    if "kernel_identities" in selected:
        add(check_kernel_identities(x, y, a, lam, seed))
    return out


def _trial_job(args):
    seed, cfg, checks = args
    return run_trial(seed, cfg, checks)


def _aggregate(per_trial: Iterable[dict], order: Sequence[str], into: Optional[dict] = None) -> dict:
    agg = {} if into is None else into
    for result in per_trial:
        for name in order:
            if name in result:
                agg[name] = agg[name].merge(result[name]) if name in agg else result[name]
    return agg


def _config_echo(cfg: TrialConfig, shapes: Sequence[ModuleShape], checks: Sequence[str]) -> dict:
    rc = cfg.radius_cfg
    return {
        "shapes": [[s.n, s.m] for s in shapes],
        "trials": cfg.trials,
        "master_seed": cfg.master_seed,
        "tol": cfg.tol,
        "implied_tol_factor": IMPLIED_TOL_FACTOR,
        "radius": {
            "grid_points": rc.grid_points,
            "refine_tol": rc.refine_tol,
            "max_refine_iters": rc.max_refine_iters,
        },
        "scale_samples": [[complex(s).real, complex(s).imag] for s in cfg.scale_samples],
        "checks": list(checks),
    }


def run_plan(
    cfg: TrialConfig,
    shapes: Sequence[ModuleShape] = DEFAULT_SHAPES,
    checks: Optional[Sequence[str]] = None,
    workers: int = 1,
) -> SuiteReport:
    """``cfg.trials`` trials for each shape; ``cfg.shape`` is ignored."""
    order = [c for c in CHECK_NAMES if checks is None or c in checks]
    jobs = [
        (trial_seed(cfg.master_seed, shape, i), replace(cfg, shape=shape), order)
        for shape in shapes
        for i in range(cfg.trials)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_trial_job, jobs, chunksize=8))
    else:
        results = map(_trial_job, jobs)
    agg = _aggregate(results, order)
    outcomes = [agg[name] for name in order if name in agg]
    passed = all(o.violations == 0 for o in outcomes)
    return SuiteReport(_config_echo(cfg, shapes, order), outcomes, passed)


def run_suite(cfg: TrialConfig, checks: Optional[Sequence[str]] = None, workers: int = 1) -> SuiteReport:
    return run_plan(cfg, (cfg.shape,), checks, workers)


def replay(seed: int, cfg: TrialConfig, checks: Optional[Sequence[str]] = None) -> SuiteReport:
    """Re-run the single trial identified by a witness seed."""
    order = [c for c in CHECK_NAMES if checks is None or c in checks]
    agg = _aggregate([run_trial(seed, cfg, order)], order)
    outcomes = [agg[name] for name in order if name in agg]
    echo = _config_echo(replace(cfg, trials=1), (cfg.shape,), order)
    echo["replay_seed"] = seed
    return SuiteReport(echo, outcomes, all(o.violations == 0 for o in outcomes))
