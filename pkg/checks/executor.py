import importlib
import sys
from concurrent.futures import ThreadPoolExecutor, TimeoutError

import config
from checks.base_check import CheckContext, CheckResult, CheckStatus


def load_check_class(module_path: str, class_name: str):
    """
    Dynamically import a check class.
    """
    module = importlib.import_module(module_path)
    return getattr(module, class_name)


def check_label(name: str, cfg: dict) -> str:
    """Check name with the identity it verifies, e.g. "haar-energy-dyadic (Lemma 4)"."""
    lemma = cfg.get("lemma")
    return f"{name} ({lemma})" if lemma else name


def run_single_check(name: str, cfg: dict, ctx: CheckContext) -> CheckResult:
    cls = load_check_class(cfg["module"], cfg["class_name"])
    result = cls().run(ctx)
    print(f"[CHECKS] {check_label(name, cfg)}: {result.status.value} (max deviation {result.max_deviation:.3e})", file=sys.stderr)
    return result


def execute_checks_parallel(checks_to_run, ctx: CheckContext) -> list[CheckResult]:
    """
    Run checks in parallel using ThreadPoolExecutor.

    Results come back in registry order whatever order the workers finish in;
    a check that raises or exceeds MAX_CHECK_RUNTIME reports ERROR.
    """
    if not checks_to_run:
        return []

    results = []
    with ThreadPoolExecutor(max_workers=min(config.MAX_WORKERS, len(checks_to_run))) as executor:
        futures = [executor.submit(run_single_check, name, cfg, ctx) for name, cfg in checks_to_run]

        for (name, cfg), future in zip(checks_to_run, futures):
            try:
                results.append(future.result(timeout=config.MAX_CHECK_RUNTIME))

            except TimeoutError:
                detail = f"timeout after {config.MAX_CHECK_RUNTIME} seconds"
                print(f"[CHECKS] {check_label(name, cfg)}: ERROR {detail}", file=sys.stderr)
                results.append(CheckResult(name, CheckStatus.ERROR, float("nan"), ctx.tolerance, detail))

            except Exception as e:
                print(f"[CHECKS] {check_label(name, cfg)}: ERROR {e}", file=sys.stderr)
                results.append(CheckResult(name, CheckStatus.ERROR, float("nan"), ctx.tolerance, str(e)))

    return results
