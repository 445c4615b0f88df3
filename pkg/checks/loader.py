import json
from pathlib import Path

# Resolve absolute path to the JSON file
REGISTRY_PATH = Path(__file__).resolve().parent / "checks_registry.json"


def load_check_definitions(path: Path = REGISTRY_PATH) -> dict:
    """Load the JSON registry (insertion order is the report order)."""
    with open(path, "r") as f:
        return json.load(f)


def get_checks_to_run(names=None, path: Path = REGISTRY_PATH):
    """
    Return (name, cfg) pairs of the enabled checks, optionally restricted to
    `names`. Unknown names raise KeyError.
    """
    registry = load_check_definitions(path)
    if names:
        unknown = [name for name in names if name not in registry]
        if unknown:
            raise KeyError(f"unknown checks: {', '.join(unknown)}")

    checks_to_run = []
    for name, cfg in registry.items():
        if not cfg.get("enabled", False):
            continue
        if names and name not in names:
            continue
        checks_to_run.append((name, cfg))

    return checks_to_run
