"""Acceptance criteria at the default scale.

The default plan (five shapes, 200 trials each, master seed 0) runs once per
module; every test prints one PASS/FAIL line for its criterion.
"""

import math
import time

import numpy as np
import pytest

from modradius.harness import (
    DEFAULT_SHAPES,
    TrialConfig,
    gen_instance,
    kernel_identity_errors,
    run_plan,
    spectral_radius_sum_bound,
    trial_seed,
)
from modradius.linalg import derive_seed, operator_norm, random_ginibre, spectral_radius
from modradius.radius import numerical_radius, numerical_radius_bruteforce

TOTAL_TRIALS = 200 * len(DEFAULT_SHAPES)


@pytest.fixture(scope="module")
def default_run():
    cfg = TrialConfig(trials=200, master_seed=0)
    start = time.perf_counter()
    report = run_plan(cfg, DEFAULT_SHAPES)
    return report, time.perf_counter() - start


@pytest.fixture
def report_line(capsys):
    def emit(criterion, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        assert ok, f"{criterion}: {detail}"

    return emit


def test_runtime_under_60s(default_run, report_line):
    report, elapsed = default_run
    report_line("default plan runtime", elapsed < 60.0 and report.passed, f"{elapsed:.1f} s, passed={report.passed}")


def test_norm_axioms(default_run, report_line):
    o = default_run[0].outcome("norm_axioms")
    ok = o.trials == TOTAL_TRIALS and o.violations == 0
    report_line("norm axioms", ok, f"{o.trials} trials, {o.violations} violations, worst margin {o.worst_margin:.3g}")


def test_sandwich_and_tightness(default_run, report_line):
    report = default_run[0]
    s = report.outcome("sandwich_bounds")
    t = report.outcome("sandwich_lower_tightness")
    ok = s.violations == 0 and t.violations == 0 and t.trials == TOTAL_TRIALS and t.stats["max_gap"] <= 1e-8
    report_line(
        "sandwich bounds with tight lower bound",
        ok,
        f"{s.violations} violations, max |Omega - ||x||/2| = {t.stats['max_gap']:.3g} over {t.trials} trials",
    )


def test_lower_bound_refinement(default_run, report_line):
    report = default_run[0]
    r = report.outcome("lower_bound_refinement")
    d = report.outcome("refinement_degeneracy")
    spread = d.stats["max_spread"]
    ok = r.violations == 0 and d.violations == 0 and spread <= 1e-9
    report_line(
        "lower bound refinement",
        ok,
        f"{r.violations} violations, max(Delta, Delta', |Gamma - Gamma'|) = {spread:.3g} (degenerate in this model)",
    )


def test_half_norm_biconditional(default_run, report_line):
    report = default_run[0]
    o = report.outcome("half_norm_equality_condition")
    grid = report.config["radius"]["grid_points"]
    ok = o.violations == 0 and o.trials == TOTAL_TRIALS and grid >= 256
    report_line(
        "half-norm equality biconditional",
        ok,
        f"{o.violations} violated implications over {o.trials} trials, grid {grid}, "
        f"both sides true on {o.stats['equality_cases']}",
    )


def test_hermitian_part_scaling(default_run, report_line):
    o = default_run[0].outcome("hermitian_part_scaling")
    positive = o.stats["improvement_positive"] / o.trials
    ok = o.violations == 0 and o.stats["min_improvement"] >= -1e-9 and positive >= 0.9
    report_line(
        "Hermitian-part scaling bounds",
        ok,
        f"{o.violations} violations, min improvement {o.stats['min_improvement']:.3g}, strictly positive on {positive:.1%}",
    )


def test_spectral_radius_sum_bound(default_run, report_line):
    o = default_run[0].outcome("spectral_radius_sum_bound")
    A = np.array([[0, 1], [0, 0]])
    B = np.array([[0, 0], [1, 0]])
    R, bound = spectral_radius(A + B), spectral_radius_sum_bound(A, B)
    ok = o.violations == 0 and o.stats["random_pairs"] >= 2000 and o.stats["structured_pairs"] >= 1 and R == 1.0 and bound == 2.0
    report_line(
        "spectral radius sum bound",
        ok,
        f"{o.violations} violations over {o.stats['random_pairs']} random and {o.stats['structured_pairs']} "
        f"structured pairs; hand example R = {R!r} <= {bound!r}",
    )


def test_refined_triangle_chain(default_run, report_line):
    report = default_run[0]
    tri = report.outcome("refined_triangle")
    chain = report.outcome("refined_triangle_equality_chain")
    cons = report.outcome("triangle_equality_consequence")
    ok = (
        tri.violations == 0
        and chain.violations == 0
        and chain.stats["max_gap"] <= 1e-8
        and cons.violations == 0
        and cons.stats["antecedent_held"] >= TOTAL_TRIALS
    )
    report_line(
        "refined triangle and equality case",
        ok,
        f"{tri.violations + chain.violations + cons.violations} violations, chain gap {chain.stats['max_gap']:.3g}, "
        f"consequent error {cons.stats.get('max_consequent_error', 0.0):.3g} on {cons.stats['antecedent_held']} "
        f"equality trials ({cons.stats['vacuous']} vacuous)",
    )


def test_engine_cross_validation(default_run, report_line):
    o = default_run[0].outcome("engine_cross_validation")
    worst = 0.0
    for k in range(100):
        M = random_ginibre(3, 3, derive_seed(0, f"acceptance/bruteforce/{k}"))
        res = numerical_radius(M)
        brute = numerical_radius_bruteforce(M, 10**5)
        allowed = res.certificate + math.pi * operator_norm(M) / 1e5
        worst = max(worst, abs(res.value - brute) / allowed)
    ok = o.violations == 0 and worst <= 1.0
    report_line(
        "engine cross-validation",
        ok,
        f"{o.violations} omega/omega_via_w disagreements; brute force uses {worst:.2e} of its allowance on 100 matrices",
    )


def test_kernel_identities(default_run, report_line):
    o = default_run[0].outcome("kernel_identities")
    worst, count = 0.0, 0
    for shape in DEFAULT_SHAPES:
        for i in range(200):
            seed = trial_seed(0, shape, i)
            x, y, a = gen_instance(seed, shape)
            errs = kernel_identity_errors(x, y, a, np.exp(1j * (seed % 6283) / 1000))
            worst = max(worst, max(e for e, _ in errs.values()))
            count += 1
    ok = o.violations == 0 and count >= 1000 and worst <= 1e-11
    report_line("kernel identities", ok, f"max entrywise error {worst:.3g} over {count} triples")
