"""Scenario files: JSON schema validation and object construction.

A scenario pins one verification setup: the commutation data (n, N, K),
the module data (V, alpha, B), the randomized-trial budget, and the
suite selection.  Validation failures carry a JSON pointer to the
offending field so the CLI can report them precisely (exit code 2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cocycle import CocycleContext, ContextError
from .cyclotomic import ScalarSyntaxError
from .gln import DimensionOverflow, GlnModule, module_from_spec
from .loop import BAlgebra, BAlgebraError

SUITE_ORDER = ("cocycle", "torus", "lie", "rep", "section3", "lattice", "probe")


class ScenarioError(ValueError):
    """Invalid scenario configuration; carries a JSON pointer."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer
        self.reason = message


@dataclass
class Scenario:
    raw: dict
    n: int
    N: int
    K: list
    alpha: list
    b_kind: str
    b_k: int
    b_psi: object
    v_spec: object
    window: int
    probe_window: int
    trials: int
    seed: int
    suites: tuple


@dataclass
class Env:
    """Constructed objects for one scenario."""

    scenario: Scenario
    ctx: CocycleContext
    alg: BAlgebra
    V: GlnModule
    params: object  # ModuleParams; typed loosely to avoid an import cycle


def _expect_int(raw, key, default=None, minimum=None, pointer=None):
    pointer = pointer or f"/{key}"
    if key not in raw:
        if default is None:
            raise ScenarioError(pointer, "required field is missing")
        return default
    val = raw[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise ScenarioError(pointer, f"expected an integer, got {val!r}")
    if minimum is not None and val < minimum:
        raise ScenarioError(pointer, f"must be >= {minimum}, got {val}")
    return val


def parse_scenario(raw: dict) -> Scenario:
    if not isinstance(raw, dict):
        raise ScenarioError("", "scenario must be a JSON object")
    known = {
        "n", "N", "K", "alpha", "B", "V",
        "window", "probe_window", "trials", "seed", "suites",
    }
    for key in raw:
        if key not in known:
            raise ScenarioError(f"/{key}", "unknown field")
    n = _expect_int(raw, "n", minimum=1)
    N = _expect_int(raw, "N", minimum=1)
    K = raw.get("K")
    if K is None:
        raise ScenarioError("/K", "required field is missing")
    if not isinstance(K, list) or len(K) != n:
        raise ScenarioError("/K", f"expected an {n}x{n} integer matrix")
    for i, row in enumerate(K):
        if not isinstance(row, list) or len(row) != n:
            raise ScenarioError(f"/K/{i}", f"expected a row of {n} integers")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ScenarioError(f"/K/{i}/{j}", f"expected an integer, got {v!r}")

    alpha = raw.get("alpha", [0] * n)
    if not isinstance(alpha, list) or len(alpha) != n:
        raise ScenarioError("/alpha", f"expected a list of {n} scalars")
    for i, a in enumerate(alpha):
        if isinstance(a, bool) or not isinstance(a, (int, str)):
            raise ScenarioError(
                f"/alpha/{i}", "expected an integer or a scalar string like \"1/2\""
            )

    b = raw.get("B", {"kind": "laurent", "psi": "1"})
    if not isinstance(b, dict):
        raise ScenarioError("/B", "expected an object")
    kind = b.get("kind", "laurent")
    if kind not in ("laurent", "truncated"):
        raise ScenarioError("/B/kind", f"expected 'laurent' or 'truncated', got {kind!r}")
    b_k = None
    b_psi = None
    if kind == "truncated":
        b_k = _expect_int(b, "k", minimum=1, pointer="/B/k")
        if "psi" in b and b["psi"] not in (0, "0"):
            raise ScenarioError("/B/psi", "psi(z) must be 0 on a truncated algebra")
    else:
        b_psi = b.get("psi", "1")
        if isinstance(b_psi, bool) or not isinstance(b_psi, (int, str)):
            raise ScenarioError("/B/psi", "expected an integer or scalar string")

    v_spec = raw.get("V", "natural")
    window = _expect_int(raw, "window", default=4, minimum=1)
    probe_window = _expect_int(raw, "probe_window", default=2, minimum=1)
    trials = _expect_int(raw, "trials", default=200, minimum=1)
    seed = _expect_int(raw, "seed", default=0)
    suites = raw.get("suites", list(SUITE_ORDER))
    if not isinstance(suites, list) or not suites:
        raise ScenarioError("/suites", "expected a non-empty list of suite names")
    for i, s in enumerate(suites):
        if s not in SUITE_ORDER:
            raise ScenarioError(
                f"/suites/{i}", f"unknown suite {s!r}; known: {', '.join(SUITE_ORDER)}"
            )
    return Scenario(
        raw=raw, n=n, N=N, K=K, alpha=alpha, b_kind=kind, b_k=b_k, b_psi=b_psi,
        v_spec=v_spec, window=window, probe_window=probe_window, trials=trials,
        seed=seed, suites=tuple(suites),
    )


def build(scn: Scenario) -> Env:
    """Construct the context, B, V and module parameters, validating each."""
    from .fock import ModuleParams

    try:
        ctx = CocycleContext(scn.n, scn.N, scn.K)
    except ContextError as exc:
        raise ScenarioError("/K", str(exc)) from exc
    field = ctx.field

    def scalar(value, pointer):
        if isinstance(value, int):
            return field.rational(value)
        try:
            return field.parse(value)
        except ScalarSyntaxError as exc:
            raise ScenarioError(pointer, str(exc)) from exc

    alpha = [scalar(a, f"/alpha/{i}") for i, a in enumerate(scn.alpha)]
    try:
        if scn.b_kind == "truncated":
            alg = BAlgebra(field, "truncated", k=scn.b_k)
        else:
            alg = BAlgebra(field, "laurent", psi_z=scalar(scn.b_psi, "/B/psi"))
    except BAlgebraError as exc:
        raise ScenarioError("/B", str(exc)) from exc
    try:
        V = module_from_spec(field, scn.n, scn.v_spec)
    except DimensionOverflow as exc:
        raise ScenarioError("/V", str(exc)) from exc
    except ValueError as exc:
        raise ScenarioError("/V", str(exc)) from exc
    params = ModuleParams(ctx, alg, V, alpha)
    return Env(scenario=scn, ctx=ctx, alg=alg, V=V, params=params)


def load_scenario(path: str) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        raise ScenarioError("", f"scenario file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ScenarioError("", f"not valid JSON: {exc}") from None
    return parse_scenario(raw)
