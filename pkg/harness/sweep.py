"""
Randomized runs of the uncertainty inequalities over an s grid.

Trials are independent and fanned out to a thread pool; results are merged
back in (s, trial) order so reports do not depend on scheduling.
"""

import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from enum import Enum
from typing import NamedTuple

import pandas as pd

from dyadic.haar import synthesize
from harness.generators import random_haar_function, random_step_function, random_wave_function
from harness.sweep_config import SweepConfig
from harness.uncertainty import UncertaintyMethod, UncertaintyReport, dyadic_uncertainty, euclid_uncertainty, gamma

SUMMARY_COLUMNS = ["s", "gamma", "trials", "min_product", "min_slack", "passed"]


class Theorem(Enum):
    """
    Which inequality a trial exercises.
    """
    DYADIC = "dyadic"  # Q^delta E^delta >= gamma ||phi||^4 on Haar expansions
    EUCLID = "euclid"  # Q(|phi|) E(phi) >= gamma on normalized step functions


class TrialResult(NamedTuple):
    theorem: Theorem
    s: float
    trial: int
    report: UncertaintyReport


class SweepResult(NamedTuple):
    trials: list[TrialResult]
    table: pd.DataFrame


def run_single_trial(
    theorem: Theorem,
    s: float,
    trial: int,
    config: SweepConfig,
    method: UncertaintyMethod = UncertaintyMethod.SPECTRAL,
) -> TrialResult:
    """Generate trial `trial`'s wave function and evaluate its uncertainty product."""
    if config.single_haar:
        expansion = random_haar_function(config.seed, config, trial)
    elif theorem is Theorem.DYADIC:
        expansion = random_wave_function(config.seed, config, trial)
    else:
        expansion = None

    if theorem is Theorem.DYADIC:
        report = dyadic_uncertainty(expansion, s, method)
    else:
        f = synthesize(expansion) if expansion is not None else random_step_function(config.seed, config, trial)
        report = euclid_uncertainty(f, s)

    return TrialResult(theorem, s, trial, report)


def run_trials(
    config: SweepConfig,
    theorems: tuple[Theorem, ...] = (Theorem.DYADIC,),
    method: UncertaintyMethod = UncertaintyMethod.SPECTRAL,
) -> list[TrialResult]:
    """
    Every (theorem, s, trial) combination of the config, in parallel.

    Results come back ordered by theorem, s-grid position and trial index.
    """
    tasks = [
        (theorem_index, s_index, trial)
        for theorem_index in range(len(theorems))
        for s_index in range(len(config.s_grid))
        for trial in range(config.trials)
    ]
    if not tasks:
        return []

    results = {}
    errors = {}
    with ThreadPoolExecutor(max_workers=min(config.workers, len(tasks))) as executor:
        futures = {
            executor.submit(
                run_single_trial,
                theorems[theorem_index],
                config.s_grid[s_index],
                trial,
                config,
                method,
            ): (theorem_index, s_index, trial)
            for theorem_index, s_index, trial in tasks
        }

        for future in as_completed(futures):
            key = futures[future]
            try:
                results[key] = future.result()
            except Exception as e:
                errors[key] = e

    if errors:
        key = min(errors)
        print(f"[SWEEP] ERROR: trial {key} failed: {errors[key]}", file=sys.stderr)
        raise errors[key]

    return [results[key] for key in sorted(results)]


def summarize(config: SweepConfig, trials: list[TrialResult]) -> pd.DataFrame:
    """One row per s: gamma(s), trial count, minimum product and slack, passes."""
    rows = []
    for s in config.s_grid:
        reports = [t.report for t in trials if t.s == s]
        rows.append({
            "s": s,
            "gamma": gamma(s),
            "trials": len(reports),
            "min_product": min((r.product for r in reports), default=float("nan")),
            "min_slack": min((r.slack for r in reports), default=float("nan")),
            "passed": sum(r.passed for r in reports),
        })
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def sweep(
    config: SweepConfig,
    method: UncertaintyMethod = UncertaintyMethod.SPECTRAL,
) -> SweepResult:
    """Dyadic inequality over the s grid with the gamma trend alongside."""
    print(f"[SWEEP] {len(config.s_grid)} s values x {config.trials} trials (seed {config.seed})", file=sys.stderr)
    trials = run_trials(config, (Theorem.DYADIC,), method)
    table = summarize(config, trials)

    failures = len(trials) - int(table["passed"].sum())
    print(f"[SWEEP] done: {len(trials)} reports, {failures} failures", file=sys.stderr)
    return SweepResult(trials, table)
