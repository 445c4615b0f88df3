"""
Command handlers. Each takes a validated CliConfig, writes its report and
returns the process exit code.
"""

import sys
from pathlib import Path

import numpy as np
import pandas as pd

import config
from checks.base_check import CheckContext, CheckStatus
from checks.executor import check_label, execute_checks_parallel
from checks.loader import get_checks_to_run
from cli.parser import CliConfig, Command, EvalMethod, FormName
from dyadic.haar import DyadicStepFunction, HaarExpansion, synthesize
from dyadic.io import load_wave_function
from forms.base import FormEvaluation, FormMethod
from forms.dyadic_forms import energy_direct, energy_spectral, gamma1, gamma2, position_direct, position_spectral
from forms.euclid_forms import energy_quadratic, euclid_haar_product, position_quadratic, variance
from harness.sweep import Theorem, run_trials, sweep
from harness.sweep_config import SweepConfig
from harness.uncertainty import REPORT_COLUMNS, UncertaintyMethod, gamma, relative_slack
from oracle.adaptive import euclid_adaptive_oracle
from oracle.base import IntegralKind
from oracle.stratified import dyadic_stratified_oracle
from utils.reporting import emit, frame_to_csv, object_to_json, render_frame

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

GAMMA_COLUMNS = ["s", "gamma1", "gamma2", "gamma", "euclid_haar_product"]
CHECK_COLUMNS = ["name", "lemma", "status", "max_deviation", "tolerance", "detail"]
INEQUALITY_COLUMNS = ["theorem", "trial"] + REPORT_COLUMNS
EVAL_COLUMNS = ["which", "s", "method", "value", "errorBound", "warning"]


def _s_grid(cfg: CliConfig) -> list[float]:
    return [float(s) for s in np.linspace(cfg.s_min, cfg.s_max, cfg.steps)]


def cmd_gamma_table(cfg: CliConfig) -> int:
    rows = [
        {
            "s": s,
            "gamma1": gamma1(s),
            "gamma2": gamma2(s),
            "gamma": gamma(s),
            "euclid_haar_product": euclid_haar_product(s),
        }
        for s in _s_grid(cfg)
    ]
    emit(render_frame(pd.DataFrame(rows, columns=GAMMA_COLUMNS), cfg.format.value), cfg.output)
    return EXIT_OK


def cmd_verify_lemmas(cfg: CliConfig) -> int:
    ctx = CheckContext(
        s=cfg.s,
        levels=cfg.level_range((-3, 3)),
        tolerance=cfg.tolerance if cfg.tolerance is not None else config.EXACT_TOLERANCE,
        seed=cfg.seed,
    )
    checks_to_run = get_checks_to_run(cfg.checks)
    print(f"[CLI] verify-lemmas: {len(checks_to_run)} checks at s={cfg.s}", file=sys.stderr)
    results = execute_checks_parallel(checks_to_run, ctx)
    definitions = dict(checks_to_run)

    frame = pd.DataFrame(
        [
            {
                "name": r.name,
                "lemma": definitions[r.name].get("lemma", ""),
                "status": r.status.value,
                "max_deviation": r.max_deviation,
                "tolerance": r.tolerance,
                "detail": r.detail,
            }
            for r in results
        ],
        columns=CHECK_COLUMNS,
    )
    emit(render_frame(frame, cfg.format.value), cfg.output)

    failed = [check_label(r.name, definitions[r.name]) for r in results if r.status is not CheckStatus.PASS]
    if failed:
        print(f"[CLI] FAILED: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _uncertainty_method(cfg: CliConfig) -> UncertaintyMethod:
    return UncertaintyMethod(cfg.method.value) if cfg.method is not None else UncertaintyMethod.SPECTRAL


def cmd_verify_inequality(cfg: CliConfig) -> int:
    sweep_config = SweepConfig(
        s_grid=(cfg.s,),
        trials=cfg.trials,
        seed=cfg.seed,
        level_range=cfg.level_range(config.DEFAULT_LEVEL_RANGE),
        single_haar=cfg.single_haar,
    )
    trials = run_trials(sweep_config, (Theorem.DYADIC, Theorem.EUCLID), _uncertainty_method(cfg))

    frame = pd.DataFrame(
        [{"theorem": t.theorem.value, "trial": t.trial, **t.report.to_row()} for t in trials],
        columns=INEQUALITY_COLUMNS,
    )
    emit(render_frame(frame, cfg.format.value), cfg.output)

    if trials:
        tightest = min(relative_slack(t.report) for t in trials)
        print(f"[CLI] {len(trials)} reports, minimum relative slack {tightest:.3e}", file=sys.stderr)

    failures = [t for t in trials if not t.report.passed]
    if failures:
        first = failures[0]
        print(f"[CLI] FAILED: {len(failures)} violations, first {first.theorem.value} trial {first.trial}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _as_step_function(obj) -> DyadicStepFunction:
    return synthesize(obj) if isinstance(obj, HaarExpansion) else obj


def evaluate_form(obj, which: FormName, s: float, method: EvalMethod, seed: int) -> FormEvaluation:
    """One quantity of a loaded wave function by the requested path."""
    if method is EvalMethod.SPECTRAL:
        if not isinstance(obj, HaarExpansion):
            raise ValueError("--method spectral needs a Haar expansion file ('coeffs'), got a step function")
        spectral = position_spectral if which is FormName.QDELTA else energy_spectral
        return spectral(obj, s)

    f = _as_step_function(obj)
    if which is FormName.VARIANCE:
        return FormEvaluation(variance(f), FormMethod.DIRECT)

    kind = IntegralKind.POSITION if which in (FormName.QDELTA, FormName.QEUCLID) else IntegralKind.ENERGY
    dyadic = which in (FormName.QDELTA, FormName.EDELTA)

    if method is EvalMethod.ORACLE:
        if dyadic:
            estimate = dyadic_stratified_oracle(f, kind, s, seed=seed)
        else:
            estimate = euclid_adaptive_oracle(f, kind, s)
        return FormEvaluation(estimate.value, FormMethod.ORACLE, estimate.bound)

    if dyadic:
        return (position_direct if kind is IntegralKind.POSITION else energy_direct)(f, s)
    return (position_quadratic if kind is IntegralKind.POSITION else energy_quadratic)(f, s)


def cmd_eval_form(cfg: CliConfig) -> int:
    obj = load_wave_function(cfg.input)
    method = cfg.method if cfg.method is not None else EvalMethod.DIRECT
    evaluation = evaluate_form(obj, cfg.which, cfg.s, method, cfg.seed)

    payload = {"which": cfg.which.value, "s": cfg.s, **evaluation.to_dict()}
    if cfg.format.value == "json":
        text = object_to_json(payload)
    else:
        text = frame_to_csv(pd.DataFrame([payload], columns=EVAL_COLUMNS))
    emit(text, cfg.output)
    return EXIT_OK


def _plot_series(table: pd.DataFrame, output) -> None:
    series = {
        "gamma": table[["s", "gamma"]],
        "min_product": table[["s", "min_product"]],
    }
    for name, frame in series.items():
        text = frame_to_csv(frame)
        if output is None:
            emit(text)
        else:
            emit(text, Path(f"{output}.{name}.csv"))


def cmd_sweep(cfg: CliConfig) -> int:
    sweep_config = SweepConfig(
        s_grid=tuple(_s_grid(cfg)),
        trials=cfg.trials,
        seed=cfg.seed,
        level_range=cfg.level_range(config.DEFAULT_LEVEL_RANGE),
        single_haar=cfg.single_haar,
    )
    result = sweep(sweep_config, _uncertainty_method(cfg))
    emit(render_frame(result.table, cfg.format.value), cfg.output)
    if cfg.plot_data:
        _plot_series(result.table, cfg.output)

    if any(not t.report.passed for t in result.trials):
        print("[CLI] FAILED: the sweep found a violated inequality", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


COMMANDS = {
    Command.GAMMA_TABLE: cmd_gamma_table,
    Command.VERIFY_LEMMAS: cmd_verify_lemmas,
    Command.VERIFY_INEQUALITY: cmd_verify_inequality,
    Command.EVAL_FORM: cmd_eval_form,
    Command.SWEEP: cmd_sweep,
}


def run_command(cfg: CliConfig) -> int:
    return COMMANDS[cfg.command](cfg)
