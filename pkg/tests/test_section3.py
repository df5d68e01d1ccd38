import random

import pytest

from looptorus import fock
from looptorus.fock import FVector, ModuleParams, act
from looptorus.gln import module_from_spec
from looptorus.loop import BAlgebra, loop_t


RADF_M1 = [(0, 0), (2, 0), (0, 2), (-2, 2), (2, -2), (4, 0)]
NONRADF_M1 = [(1, 0), (0, 1), (1, 1), (2, 1), (-1, 2), (3, 0)]


def draw_deg(rng):
    return (rng.randint(-3, 3), rng.randint(-3, 3))


def draw_xi(params, rng):
    return FVector.basis(
        params, (rng.randint(-2, 2), rng.randint(-2, 2)), rng.randrange(params.V.dim)
    )


def draw_b(params, rng):
    if params.alg.kind == "truncated":
        return rng.randint(0, params.alg.k - 1)
    return rng.randint(-2, 2)


def test_t_bracket_structure_zero(params_m1, params_m1_alpha, params_id_trunc):
    rng = random.Random(20)
    for params in (params_m1, params_m1_alpha, params_id_trunc):
        radf = RADF_M1  # identity context: everything central, same pool works
        for _ in range(25):
            u, v = draw_deg(rng), draw_deg(rng)
            r, s = rng.choice(radf), rng.choice(radf)
            bs = [draw_b(params, rng) for _ in range(4)]
            xi = draw_xi(params, rng)
            assert fock.t_bracket_structure_check(params, u, v, r, s, *bs, xi).is_zero()
            assert fock.tprime_bracket_check(params, u, v, r, s, *bs, xi).is_zero()


def test_prop31_commuting_pairs(params_m1, params_m1_alpha):
    rng = random.Random(21)
    for params in (params_m1, params_m1_alpha):
        for _ in range(25):
            r, s = rng.choice(NONRADF_M1), rng.choice(NONRADF_M1)
            bs = [draw_b(params, rng) for _ in range(4)]
            assert fock.prop31_check(params, r, s, *bs, draw_xi(params, rng)).is_zero()


def test_prop31_rejects_central_degree(params_m1):
    with pytest.raises(ValueError):
        fock.prop31_check(params_m1, (2, 0), (1, 0), 0, 0, 0, 0, draw_xi(params_m1, random.Random(0)))


def test_lemma32_zero(params_m1, params_m1_alpha):
    rng = random.Random(22)
    for params in (params_m1, params_m1_alpha):
        for _ in range(25):
            u = draw_deg(rng)
            r = rng.choice(RADF_M1)
            s = rng.choice(NONRADF_M1)
            bs = [draw_b(params, rng) for _ in range(4)]
            assert fock.lemma32_check(params, u, r, s, *bs, draw_xi(params, rng)).is_zero()


def test_lemma32_plus_sign_variant_fails(params_m1):
    # flipping the relative sign of the two structure terms breaks the identity
    params = params_m1
    ctx = params.ctx
    u, r, s = (1, 0), (2, 0), (1, 0)
    xi = FVector.basis(params, (0, 1), 0)
    assert fock.lemma32_check(params, u, r, s, 0, 0, 0, 0, xi).is_zero()

    def pair(deg):
        left = fock.op_t(params, (-deg[0], -deg[1]), 0)
        right = fock.op_ad(params, deg, 0)
        return lambda v: left(right(v))

    A_left = fock.op_t(params, (-r[0], -r[1]), 0)
    A_right = fock.op_D(params, u, r, 0)
    A = lambda v: A_left(A_right(v))  # noqa: E731
    lhs = fock.op_commutator(A, pair(s))(xi)
    rs = (r[0] + s[0], r[1] + s[1])
    term1 = pair(rs)(xi).scaled(ctx.sigma(r, s) ** 2)
    term2 = pair(s)(xi).scaled(ctx.sigma((-r[0], -r[1]), r))
    us = ctx.field.rational(u[0] * s[0] + u[1] * s[1])
    assert (lhs - (term1 - term2).scaled(us)).is_zero()
    assert not (lhs - (term1 + term2).scaled(us)).is_zero()


def test_lemma32_argument_validation(params_m1):
    xi = draw_xi(params_m1, random.Random(1))
    with pytest.raises(ValueError):
        fock.lemma32_check(params_m1, (1, 0), (1, 0), (0, 1), 0, 0, 0, 0, xi)
    with pytest.raises(ValueError):
        fock.lemma32_check(params_m1, (1, 0), (2, 0), (0, 2), 0, 0, 0, 0, xi)


def test_eta_transport_coherent(params_m1, params_m1_alpha, params_id_trunc):
    rng = random.Random(23)
    for params in (params_m1, params_m1_alpha, params_id_trunc):
        for _ in range(15):
            u, v = draw_deg(rng), draw_deg(rng)
            r, s = rng.choice(RADF_M1), rng.choice(RADF_M1)
            bs = [draw_b(params, rng) for _ in range(4)]
            res_i, res_ii = fock.eta_check(params, u, v, r, s, *bs, draw_xi(params, rng))
            assert res_i.is_zero()
            assert res_ii.is_zero()


def test_eta_transport_incoherent_witness(ctx_z3):
    # N=3: sqrt(sigma) is not multiplicative on rad f, and exactly the
    # element-level transport feels it; the operator identity does not.
    alg = BAlgebra(ctx_z3.field, "laurent")
    V = module_from_spec(ctx_z3.field, 2, "trivial")
    params = ModuleParams(ctx_z3, alg, V, (0, 0))
    assert ctx_z3.sqrt_branch_defect((0, 3), (3, 0)) == -ctx_z3.field.one
    xi = FVector.basis(params, (1, 0), 0)
    res_i, res_ii = fock.eta_check(params, (1, 0), (0, 1), (0, 3), (3, 0), 0, 0, 0, 0, xi)
    assert not res_i.is_zero()
    assert res_ii.is_zero()


def test_dtilde_and_scalar_transport(params_m1_alpha):
    params = params_m1_alpha
    rng = random.Random(24)
    for _ in range(20):
        u = draw_deg(rng)
        r = rng.choice(RADF_M1)
        b1, b2 = draw_b(params, rng), draw_b(params, rng)
        xi = draw_xi(params, rng)
        assert fock.dtilde_check(params, u, r, b1, b2, xi).is_zero()
        s = rng.choice(NONRADF_M1)
        assert fock.adb_scalar_check(params, s, b1, xi).is_zero()


def test_adb_scalar_rejects_central(params_m1):
    with pytest.raises(ValueError):
        fock.adb_scalar_check(params_m1, (2, 0), 1, draw_xi(params_m1, random.Random(2)))


def test_d0_commutes_and_degree(params_m1, params_m1_alpha):
    rng = random.Random(25)
    for params in (params_m1, params_m1_alpha):
        for _ in range(20):
            u, v = draw_deg(rng), draw_deg(rng)
            r = rng.choice(RADF_M1)
            b1, b2 = draw_b(params, rng), draw_b(params, rng)
            assert fock.d0_commutes_check(params, v, u, r, b1, b2, draw_xi(params, rng)).is_zero()
            s = draw_deg(rng)
            assert fock.t_degree_check(params, u, r, b1, b2, s, params.V.basis_vector(0))


def test_tprime_commutes_with_t(params_m1_alpha):
    params = params_m1_alpha
    rng = random.Random(26)
    for _ in range(20):
        u = draw_deg(rng)
        m = rng.choice(RADF_M1)
        k = draw_deg(rng)
        b1, b2 = draw_b(params, rng), draw_b(params, rng)
        assert fock.tprime_commutes_with_t(params, u, m, b1, b2, k, draw_xi(params, rng)).is_zero()


def test_lambda_and_eq32(params_m1_alpha):
    params = params_m1_alpha
    rng = random.Random(27)
    for _ in range(20):
        u = draw_deg(rng)
        b = draw_b(params, rng)
        v = rng.randrange(params.V.dim)
        assert fock.lambda_check(params, u, b, v).is_zero()
        assert fock.eq32_check(params, u, b, draw_deg(rng), v).is_zero()


def test_eq35_eq36_eq38(params_m1, params_m1_alpha, params_id_trunc):
    rng = random.Random(28)
    for params in (params_m1, params_m1_alpha, params_id_trunc):
        for _ in range(15):
            u = draw_deg(rng)
            r = rng.choice(RADF_M1)
            k = draw_deg(rng)
            b = draw_b(params, rng)
            v = rng.randrange(params.V.dim)
            assert fock.eq35_check(params, u, r, b, k, v).is_zero()
            assert fock.eq36_check(params, u, r, k, v).is_zero()
            assert fock.eq38_check(params, u, r, b, draw_xi(params, rng)).is_zero()


def test_eq37_holds_at_element_level(params_m1_alpha):
    params = params_m1_alpha
    rng = random.Random(29)
    for _ in range(20):
        v, u = draw_deg(rng), draw_deg(rng)
        r = rng.choice(RADF_M1)
        b = draw_b(params, rng)
        assert fock.eq37_residual(params, v, u, r, b).is_zero()


def test_proj0_kills_generators(params_m1, params_m1_alpha):
    rng = random.Random(30)
    for params in (params_m1, params_m1_alpha):
        for _ in range(20):
            m = draw_deg(rng)
            w = fock.w_generator(params, m, rng.randrange(params.V.dim))
            assert not any(fock.proj0(w))


def test_proj0_identity_on_zero_space(params_m1):
    params = params_m1
    xi = FVector.basis(params, (0, 0), 1).scaled(3)
    assert fock.proj0(xi) == tuple(xi.component((0, 0)))


def test_proj0_surjective(params_m1):
    # every V vector is hit from a pure degree-m slot
    params = params_m1
    m = (1, 1)
    c = params.ctx.sqrt_sigma_diag(m)
    for idx in range(params.V.dim):
        out = fock.proj0(FVector.basis(params, m, idx).scaled(c))
        assert out == tuple(params.V.basis_vector(idx))


def test_proj0_intertwines_tprime(params_m1, params_m1_alpha, params_id_trunc):
    rng = random.Random(31)
    for params in (params_m1, params_m1_alpha, params_id_trunc):
        for _ in range(15):
            u = draw_deg(rng)
            r = rng.choice(RADF_M1)
            b1, b2 = draw_b(params, rng), draw_b(params, rng)
            res = fock.proj0_intertwine_check(params, u, r, b1, b2, draw_xi(params, rng))
            assert not any(res)


def test_generator_span_not_t_stable(params_m1):
    # t^k moves a kernel generator out of the kernel: the witness residual
    # is (zeta_4 - 1) v, so the quotient is only a quotient of the T' action
    params = params_m1
    w = fock.w_generator(params, (1, 0), 0)
    moved = act(loop_t(params.ctx, params.alg, (0, 1), 0), w)
    res = fock.proj0(moved)
    zeta4 = params.ctx.field.zeta(1)
    assert res[0] == zeta4 - params.ctx.field.one
    assert not res[1]
