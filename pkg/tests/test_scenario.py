import json

import pytest

from looptorus.scenario import (
    SUITE_ORDER,
    ScenarioError,
    build,
    load_scenario,
    parse_scenario,
)


BASE = {
    "n": 2,
    "N": 2,
    "K": [[0, 1], [1, 0]],
}


def scn(**overrides):
    raw = dict(BASE)
    raw.update(overrides)
    return raw


def pointer_of(raw):
    with pytest.raises(ScenarioError) as exc:
        build(parse_scenario(raw))
    return exc.value.pointer


def test_defaults():
    s = parse_scenario(dict(BASE))
    assert s.alpha == [0, 0]
    assert s.b_kind == "laurent" and s.b_psi == "1"
    assert s.v_spec == "natural"
    assert (s.window, s.probe_window, s.trials, s.seed) == (4, 2, 200, 0)
    assert s.suites == SUITE_ORDER


def test_build_constructs_env():
    env = build(parse_scenario(scn(alpha=["1/2", -1], V="dual")))
    assert env.ctx.n == 2 and env.ctx.N == 2
    assert env.V.dim == 2
    assert env.params.alpha[0] == env.ctx.field.rational("1/2")


def test_pointer_per_field():
    assert pointer_of({"N": 2, "K": [[0]]}) == "/n"
    assert pointer_of(scn(n="2")) == "/n"
    assert pointer_of(scn(n=0)) == "/n"
    assert pointer_of(scn(N=True)) == "/N"
    assert pointer_of({"n": 2, "N": 2}) == "/K"
    assert pointer_of(scn(K=[[0, 1]])) == "/K"
    assert pointer_of(scn(K=[[0, 1], [1]])) == "/K/1"
    assert pointer_of(scn(K=[[0, 1], [1, 0.5]])) == "/K/1/1"
    assert pointer_of(scn(alpha=[0])) == "/alpha"
    assert pointer_of(scn(alpha=[0, None])) == "/alpha/1"
    assert pointer_of(scn(alpha=[0, "3/0"])) == "/alpha/1"
    assert pointer_of(scn(B=[])) == "/B"
    assert pointer_of(scn(B={"kind": "poly"})) == "/B/kind"
    assert pointer_of(scn(B={"kind": "truncated"})) == "/B/k"
    assert pointer_of(scn(B={"kind": "truncated", "k": 0})) == "/B/k"
    assert pointer_of(scn(B={"kind": "truncated", "k": 2, "psi": "1"})) == "/B/psi"
    assert pointer_of(scn(B={"kind": "laurent", "psi": []})) == "/B/psi"
    assert pointer_of(scn(V="spin")) == "/V"
    assert pointer_of(scn(V={"tensor": ["natural"] * 4})) == "/V"  # 16 > 512 at n=23? no: dim guard below
    assert pointer_of(scn(window=0)) == "/window"
    assert pointer_of(scn(trials="many")) == "/trials"
    assert pointer_of(scn(suites=[])) == "/suites"
    assert pointer_of(scn(suites=["cocycle", "spectral"])) == "/suites/1"
    assert pointer_of(scn(extra=1)) == "/extra"


def test_asymmetric_K_rejected():
    # q_ij q_ji = 1 forces K[i][j] + K[j][i] = 0 mod N
    assert pointer_of(scn(K=[[0, 1], [0, 0]])) == "/K"


def test_dimension_guard_pointer():
    raw = {"n": 23, "N": 2, "K": [[0] * 23 for _ in range(23)], "V": {"tensor": ["natural", "natural"]}}
    assert pointer_of(raw) == "/V"


def test_truncated_forces_zero_psi():
    env = build(parse_scenario(scn(B={"kind": "truncated", "k": 2})))
    assert env.alg.kind == "truncated"
    assert not env.alg.element({1: env.ctx.field.one}).psi()


def test_psi_scalar_parse():
    env = build(parse_scenario(scn(B={"kind": "laurent", "psi": "z^2"})))
    assert env.alg.element({1: env.ctx.field.one}).psi() == env.ctx.field.zeta(2)


def test_scenario_must_be_object():
    with pytest.raises(ScenarioError):
        parse_scenario([1, 2])


def test_load_scenario_errors(tmp_path):
    with pytest.raises(ScenarioError, match="not found"):
        load_scenario(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ScenarioError, match="not valid JSON"):
        load_scenario(str(bad))
    good = tmp_path / "ok.json"
    good.write_text(json.dumps(BASE))
    assert load_scenario(str(good)).n == 2


def test_shipped_scenarios_parse():
    from conftest import scenario_path

    for name in (
        "n2_minus1", "identity", "n2_zeta4", "n2_zeta6", "n3_zeta3", "n4_sym2",
    ):
        env = build(load_scenario(scenario_path(name)))
        assert env.params.V.dim >= 1
