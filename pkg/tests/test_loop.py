import random

import pytest

from looptorus.loop import (
    BAlgebra,
    BAlgebraError,
    GElement,
    LoopElement,
    cq2_embed,
    g_bracket,
    loop_D,
    loop_ad,
    loop_t,
    psi_kernel_element,
    tau_bracket,
)
from looptorus.torus import TorusElement


def test_ad_of_central_is_zero(ctx_m1):
    assert GElement.ad(ctx_m1, (2, 0)).is_zero()
    assert not GElement.ad(ctx_m1, (1, 0)).is_zero()


def test_D_requires_central_degree(ctx_m1):
    GElement.D(ctx_m1, (1, 0), (2, 2))
    with pytest.raises(ValueError):
        GElement.D(ctx_m1, (1, 0), (1, 0))


def test_bracket_t_t(ctx_m1):
    x = GElement.t(ctx_m1, (1, 0))
    y = GElement.t(ctx_m1, (0, 1))
    br = x.bracket(y)
    assert br.torus_part() == TorusElement.monomial(ctx_m1, (1, 1), 2)
    assert not br.inner and not br.witt


def test_bracket_ad_ad(ctx_m1):
    # [ad t^r, ad t^s] = (sigma(r,s)-sigma(s,r)) ad t^(r+s)
    x = GElement.ad(ctx_m1, (1, 0))
    y = GElement.ad(ctx_m1, (0, 1))
    br = x.bracket(y)
    assert br == GElement.ad(ctx_m1, (1, 1), 2)
    # r+s central: the bracket coefficient cancels on its own
    z = GElement.ad(ctx_m1, (1, 2))
    w = GElement.ad(ctx_m1, (1, 0))
    assert z.bracket(w).is_zero()


def test_bracket_D_ad(ctx_m1):
    # [D(u,r), ad t^s] = (u,s) sigma(r,s) ad t^(r+s)
    d = GElement.D(ctx_m1, (1, 0), (0, 0))
    a = GElement.ad(ctx_m1, (0, 1))
    assert d.bracket(a).is_zero()  # (u,s) = 0
    d2 = GElement.D(ctx_m1, (0, 1), (0, 0))
    assert d2.bracket(a) == GElement.ad(ctx_m1, (0, 1))
    d3 = GElement.D(ctx_m1, (0, 1), (2, 0))
    got = d3.bracket(a)
    sig = ctx_m1.sigma((2, 0), (0, 1))
    assert got == GElement.ad(ctx_m1, (2, 1), sig)


def test_bracket_D_D(ctx_m1):
    # [D(u,r), D(u',r')] = D(w, r+r'), w = sigma(r,r')((u,r')u' - (u',r)u)
    u, r = (1, 0), (2, 0)
    up, rp = (0, 1), (0, 2)
    d = GElement.D(ctx_m1, u, r).bracket(GElement.D(ctx_m1, up, rp))
    sig = ctx_m1.sigma(r, rp)
    # (u,r') = 0, (u',r) = 0 here: bracket vanishes
    assert d.is_zero()
    d2 = GElement.D(ctx_m1, (1, 0), (2, 0)).bracket(GElement.D(ctx_m1, (1, 1), (2, 2)))
    # (u,r') = 2, (u',r) = 2: w = sig*(2*(1,1) - 2*(1,0)) = sig*(0,2)
    w = tuple(sig * c for c in (0, 2))
    assert d2 == GElement(ctx_m1, witt={(4, 2): w})


def test_bracket_D_t(ctx_m1):
    # [D(u,r), t^s] = (u,s) sigma(r,s) t^(r+s)
    d = GElement.D(ctx_m1, (1, 2), (0, 0))
    x = GElement.t(ctx_m1, (1, 1))
    assert d.bracket(x) == GElement.t(ctx_m1, (1, 1), 3)
    assert x.bracket(d) == GElement.t(ctx_m1, (1, 1), -3)


def test_bracket_ad_t(ctx_m1):
    # [ad t^r, t^s] = (sigma(r,s)-sigma(s,r)) t^(r+s)
    a = GElement.ad(ctx_m1, (1, 0))
    x = GElement.t(ctx_m1, (0, 1))
    assert a.bracket(x) == GElement.t(ctx_m1, (1, 1), 2)
    # torus side is an abelian ideal direction: [t, t] stays torus
    assert a.bracket(x).torus_part().support() == [(1, 1)]


def test_g_jacobi_mixed_species(ctx_m1, ctx_z3):
    rng = random.Random(4)
    for ctx in (ctx_m1, ctx_z3):
        radf = [(0, 0), (ctx.N, 0), (0, -ctx.N), (ctx.N, ctx.N)]
        nonradf = [a for a in [(1, 0), (0, 1), (1, 2), (-1, 1)] if not ctx.in_radf(a)]
        def g(species):
            if species == "t":
                return GElement.t(ctx, (rng.randint(-3, 3), rng.randint(-3, 3)), rng.randint(1, 3))
            if species == "ad":
                return GElement.ad(ctx, rng.choice(nonradf), rng.randint(1, 3))
            return GElement.D(ctx, (rng.randint(-2, 2), rng.randint(-2, 2)), rng.choice(radf))
        species = ["t", "ad", "D"]
        for sx in species:
            for sy in species:
                for sz in species:
                    x, y, z = g(sx), g(sy), g(sz)
                    jac = (
                        g_bracket(g_bracket(x, y), z)
                        + g_bracket(g_bracket(y, z), x)
                        + g_bracket(g_bracket(z, x), y)
                    )
                    assert jac.is_zero(), (sx, sy, sz)
                    assert (g_bracket(x, y) + g_bracket(y, x)).is_zero()


def test_b_laurent_psi():
    from looptorus.cyclotomic import cyclotomic_field

    F = cyclotomic_field(4)
    alg = BAlgebra(F, "laurent", psi_z=F.zeta())
    b = alg.z(2)
    assert b.psi() == F.rational(-1)  # i^2
    assert alg.z(-1).psi() == F.zeta(3)  # psi respects inversion
    two_terms = alg.element({0: F.one, 1: F.one})
    assert two_terms.psi() == F.one + F.zeta()


def test_b_laurent_rejects_zero_psi():
    from looptorus.cyclotomic import cyclotomic_field

    F = cyclotomic_field(4)
    with pytest.raises(BAlgebraError):
        BAlgebra(F, "laurent", psi_z=F.zero)


def test_b_truncated_nilpotent():
    from looptorus.cyclotomic import cyclotomic_field

    F = cyclotomic_field(4)
    alg = BAlgebra(F, "truncated", k=2)
    assert alg.mul_basis(1, 1) is None  # z^2 = 0
    assert alg.mul_basis(0, 1) == 1
    assert alg.z(1).psi() == F.zero  # characters kill nilpotents
    with pytest.raises(BAlgebraError):
        alg.check_index(2)
    with pytest.raises(BAlgebraError):
        alg.check_index(-1)
    with pytest.raises(BAlgebraError):
        BAlgebra(F, "truncated", k=2, psi_z=F.one)  # psi(z) must be 0


def test_psi_multiplicative_random():
    from looptorus.cyclotomic import cyclotomic_field

    F = cyclotomic_field(6)
    alg = BAlgebra(F, "laurent", psi_z=F.zeta(2))
    rng = random.Random(5)
    for _ in range(40):
        b1 = alg.element({rng.randint(-3, 3): F.rational(rng.randint(-4, 4))})
        b2 = alg.element(
            {rng.randint(-3, 3): F.rational(rng.randint(-4, 4)), 0: F.one}
        )
        assert (b1 * b2).psi() == b1.psi() * b2.psi()
        assert psi_kernel_element(b2).psi() == F.zero


def test_loop_bracket_splits_over_b(ctx_m1):
    alg = BAlgebra(ctx_m1.field, "laurent")
    x = loop_t(ctx_m1, alg, (1, 0), 2)
    y = loop_ad(ctx_m1, alg, (0, 1), -1)
    br = tau_bracket(x, y)
    assert set(br.parts) == {1}  # z^2 * z^-1
    # [t^r, ad t^s] = -(sigma(s,r)-sigma(r,s)) t^(r+s) = +2 t^(1,1) here
    assert br.parts[1].torus == {(1, 1): ctx_m1.field.rational(2)}


def test_loop_bracket_truncation_drops_overflow(ctx_m1):
    alg = BAlgebra(ctx_m1.field, "truncated", k=2)
    x = loop_t(ctx_m1, alg, (1, 0), 1)
    y = loop_t(ctx_m1, alg, (0, 1), 1)
    assert tau_bracket(x, y).is_zero()  # z * z = 0 kills the only term
    x0 = loop_t(ctx_m1, alg, (1, 0), 0)
    assert not tau_bracket(x0, y).is_zero()


def test_tau_jacobi_mixed(params_m1):
    ctx, alg = params_m1.ctx, params_m1.alg
    rng = random.Random(6)
    radf = [(0, 0), (2, 0), (0, -2)]
    nonradf = [(1, 0), (0, 1), (1, 2)]
    def elem():
        b = rng.randint(-1, 2)
        k = rng.random()
        if k < 0.4:
            return loop_t(ctx, alg, (rng.randint(-2, 2), rng.randint(-2, 2)), b, rng.randint(1, 3))
        if k < 0.7:
            return loop_ad(ctx, alg, rng.choice(nonradf), b, rng.randint(1, 3))
        return loop_D(ctx, alg, (rng.randint(-2, 2), rng.randint(-2, 2)), rng.choice(radf), b)
    for _ in range(60):
        x, y, z = elem(), elem(), elem()
        jac = (
            tau_bracket(tau_bracket(x, y), z)
            + tau_bracket(tau_bracket(y, z), x)
            + tau_bracket(tau_bracket(z, x), y)
        )
        assert jac.is_zero()
        assert (tau_bracket(x, y) + tau_bracket(y, x)).is_zero()


def test_cq2_embed_is_lie_map(ctx_m1):
    alg = BAlgebra(ctx_m1.field, "laurent")
    a = TorusElement.monomial(ctx_m1, (1, 0), 2)
    b = TorusElement.monomial(ctx_m1, (0, 1)) + TorusElement.monomial(ctx_m1, (1, 1))
    lhs = cq2_embed(a.bracket(b), alg, 3)
    rhs = tau_bracket(cq2_embed(a, alg, 1), cq2_embed(b, alg, 2))
    assert lhs == rhs


def test_cq2_embed_kills_center(ctx_m1):
    alg = BAlgebra(ctx_m1.field, "laurent")
    central = TorusElement.monomial(ctx_m1, (2, 0))
    assert cq2_embed(central, alg, 0).is_zero()
    with pytest.raises(TypeError):
        cq2_embed("t", alg, 0)


def test_loop_element_torus_product(ctx_m1):
    alg = BAlgebra(ctx_m1.field, "laurent")
    x = loop_t(ctx_m1, alg, (1, 0), 1)
    y = loop_t(ctx_m1, alg, (0, 1), 2)
    prod = x.torus_product(y)
    assert set(prod.parts) == {3}
    assert prod.parts[3].torus == {(1, 1): ctx_m1.field.one}
    with pytest.raises(TypeError):
        loop_ad(ctx_m1, alg, (1, 0)).torus_product(y)


def test_mixed_context_rejected(ctx_m1, ctx_z3):
    alg1 = BAlgebra(ctx_m1.field, "laurent")
    alg3 = BAlgebra(ctx_z3.field, "laurent")
    x = loop_t(ctx_m1, alg1, (1, 0))
    y = loop_t(ctx_z3, alg3, (1, 0))
    with pytest.raises(ValueError):
        tau_bracket(x, y)
