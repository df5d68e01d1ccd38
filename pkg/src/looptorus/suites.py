"""Randomized verification suites.

Each suite draws random instances of the identities it owns and records
any nonzero residual together with the inputs that produced it, so a
failure can be replayed.  All draws come from a seed-split RNG: the same
scenario, seed, trial count and window produce the same report.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import fock
from .cocycle import vadd, vneg, vscale
from .loop import (
    GElement,
    LoopElement,
    cq2_embed,
    loop_D,
    loop_ad,
    loop_t,
    psi_kernel_element,
    tau_bracket,
)
from .syntax import format_b, format_fvector, format_g, format_loop, format_scalar
from .torus import TorusElement, commutator_witness


@dataclass
class SuiteResult:
    name: str
    trials: int
    failures: list = dc_field(default_factory=list)
    wall_time_s: float = 0.0
    notes: list = dc_field(default_factory=list)
    detail: dict = None

    @property
    def passed(self) -> bool:
        return not self.failures


def _box(n, w):
    out = [()]
    for _ in range(n):
        out = [v + (x,) for v in out for x in range(-w, w + 1)]
    return out


class _Draw:
    """Deterministic random input factory for one suite run."""

    def __init__(self, env, rng, window):
        self.env = env
        self.ctx = env.ctx
        self.alg = env.alg
        self.params = env.params
        self.rng = rng
        self.window = window
        box = _box(self.ctx.n, window)
        self.degs = box
        self.radf = [a for a in box if self.ctx.in_radf(a)]
        self.nonradf = [a for a in box if not self.ctx.in_radf(a)]
        # nonzero radical degrees exist beyond any window: N * e_i always works
        extra = []
        for i in range(self.ctx.n):
            e = tuple(self.ctx.N if j == i else 0 for j in range(self.ctx.n))
            extra.extend([e, vneg(e)])
        self.radf = sorted(set(self.radf) | set(extra))

    def deg(self):
        return self.degs[self.rng.randrange(len(self.degs))]

    def radf_deg(self):
        return self.radf[self.rng.randrange(len(self.radf))]

    def nonradf_deg(self):
        if not self.nonradf:
            return None
        return self.nonradf[self.rng.randrange(len(self.nonradf))]

    def rational(self, lo=-3, hi=3):
        num = self.rng.randint(lo, hi)
        den = self.rng.choice((1, 1, 2, 3))
        return Fraction(num, den)

    def scalar(self):
        field = self.ctx.field
        x = field.rational(self.rational())
        if self.rng.random() < 0.4:
            x = x + field.zeta(self.rng.randrange(field.conductor)) * self.rational()
        return x

    def uvec(self, allow_zero=True):
        u = tuple(self.rational() for _ in range(self.ctx.n))
        if not allow_zero and not any(u):
            u = tuple(1 for _ in range(self.ctx.n))
        return u

    def b_exp(self):
        if self.alg.kind == "truncated":
            return self.rng.randrange(self.alg.k)
        return self.rng.randint(-2, 2)

    def b_elem(self):
        terms = {self.b_exp(): self.ctx.field.rational(self.rational())}
        if self.rng.random() < 0.3:
            terms[self.b_exp()] = self.ctx.field.rational(self.rational())
        b = self.alg.element(terms)
        if b.is_zero():
            return self.alg.one()
        return b

    def fvec(self, comps=2):
        out = fock.FVector.zero(self.params)
        d = self.params.V.dim
        for _ in range(comps):
            vec = tuple(self.ctx.field.rational(self.rational()) for _ in range(d))
            if not any(vec):
                vec = self.params.V.basis_vector(self.rng.randrange(d))
            out = out + fock.FVector.basis(self.params, self.deg(), vec)
        if out.is_zero():
            out = fock.FVector.basis(self.params, self.deg(), 0)
        return out

    def vvec(self):
        d = self.params.V.dim
        vec = tuple(self.ctx.field.rational(self.rational()) for _ in range(d))
        if not any(vec):
            vec = self.params.V.basis_vector(self.rng.randrange(d))
        return vec

    def g_monomial(self, species=None):
        if species is None:
            species = self.rng.choice(self._species())
        if species == "t":
            return GElement.t(self.ctx, self.deg(), self.scalar())
        if species == "ad":
            return GElement.ad(self.ctx, self.nonradf_deg(), self.scalar())
        return GElement.D(self.ctx, self.uvec(), self.radf_deg())

    def _species(self):
        return ("t", "ad", "D") if self.nonradf else ("t", "D")

    def loop_monomial(self, species=None):
        return LoopElement.make(self.g_monomial(species), self.alg, self.b_exp())


def _fail(failures, check, inputs, residual):
    failures.append(
        {
            "check": check,
            "inputs": inputs,
            "residual_norm_is_zero": False,
            "witness": residual,
        }
    )


def _sdeg(a):
    return list(a)


# ---------------------------------------------------------------------------


def run_cocycle(env, rng, trials, window):
    ctx = env.ctx
    field = ctx.field
    draw = _Draw(env, rng, window)
    failures = []
    for _ in range(trials):
        a, b, c = draw.deg(), draw.deg(), draw.deg()
        inputs = {"a": _sdeg(a), "b": _sdeg(b), "c": _sdeg(c)}
        # oracle: multiply the q_ij^(a_i b_j) factors one by one
        prod = field.one
        for i in range(ctx.n):
            for j in range(ctx.n):
                if i > j and a[i] and b[j]:
                    prod = prod * field.zeta(2 * ctx.K[i][j]) ** (a[i] * b[j])
        if prod != ctx.sigma(a, b):
            _fail(failures, "sigma_factor_oracle", inputs, format_scalar(prod - ctx.sigma(a, b)))
        if ctx.sigma(vadd(a, b), c) != ctx.sigma(a, c) * ctx.sigma(b, c):
            _fail(failures, "sigma_biadditive_left", inputs, "nonzero")
        if ctx.sigma(a, vadd(b, c)) != ctx.sigma(a, b) * ctx.sigma(a, c):
            _fail(failures, "sigma_biadditive_right", inputs, "nonzero")
        if ctx.f(a, b) != ctx.sigma(a, b) * ctx.sigma(b, a).inv():
            _fail(failures, "f_from_sigma", inputs, "nonzero")
        if ctx.f(a, a) != field.one:
            _fail(failures, "f_alternating", inputs, format_scalar(ctx.f(a, a)))
        if ctx.f(a, b) * ctx.f(b, a) != field.one:
            _fail(failures, "f_antisymmetric", inputs, "nonzero")
        if ctx.f(vadd(a, b), c) != ctx.f(a, c) * ctx.f(b, c):
            _fail(failures, "f_bimultiplicative_left", inputs, "nonzero")
        if ctx.f(a, vadd(b, c)) != ctx.f(a, b) * ctx.f(a, c):
            _fail(failures, "f_bimultiplicative_right", inputs, "nonzero")
        k = rng.randint(-4, 4)
        ka = vscale(k, a)
        if ctx.f(ka, a) != field.one or ctx.f(a, ka) != field.one:
            _fail(failures, "f_scaled_pair", {**inputs, "k": k}, "nonzero")
        ta = TorusElement.monomial(ctx, a)
        tb = TorusElement.monomial(ctx, b)
        if ta * tb != TorusElement.monomial(ctx, vadd(a, b), ctx.sigma(a, b)):
            _fail(failures, "monomial_product", inputs, "nonzero")
        if ta * tb != (tb * ta).scaled(ctx.f(a, b)):
            _fail(failures, "monomial_commutation", inputs, "nonzero")
        if ctx.sqrt_sigma_diag(a) * ctx.sqrt_sigma_diag(a) != ctx.sigma(a, a):
            _fail(failures, "sqrt_squares_to_sigma", inputs, "nonzero")
        zero = (0,) * ctx.n
        if ctx.sigma(a, zero) != field.one or ctx.sigma(zero, a) != field.one:
            _fail(failures, "sigma_unital", inputs, "nonzero")
        if ctx.f_is_one(a, b) != (ctx.f(a, b) == field.one):
            _fail(failures, "f_is_one_consistent", inputs, "mismatch")
    return failures, []


def run_lattice(env, rng, trials, window):
    ctx = env.ctx
    draw = _Draw(env, rng, window)
    failures = []
    notes = []
    basis = ctx.radf_basis
    for col in basis:
        if not ctx.in_radf(col):
            _fail(failures, "radf_basis_in_radical", {"column": _sdeg(col)}, "outside")
    # full window agreement between the direct test and basis membership
    mism = [a for a in draw.degs if ctx.in_radf(a) != ctx.radf_contains(a)]
    if mism:
        _fail(
            failures,
            "radf_window_agreement",
            {"window": window},
            f"{len(mism)} mismatches, first {_sdeg(mism[0])}",
        )
    for _ in range(trials):
        a = draw.deg()
        inputs = {"a": _sdeg(a)}
        direct = all(ctx.f_is_one(a, e) for e in _units(ctx.n))
        if ctx.in_radf(a) != direct:
            _fail(failures, "in_radf_unit_oracle", inputs, "mismatch")
        coeffs = [rng.randint(-3, 3) for _ in basis]
        combo = (0,) * ctx.n
        for c, col in zip(coeffs, basis):
            combo = vadd(combo, vscale(c, col))
        if not ctx.in_radf(combo):
            _fail(failures, "radf_closed_under_combos", {"coeffs": coeffs}, _sdeg(combo))
    notes.append(
        "sqrt branch multiplicative on rad f"
        if ctx.branch_coherent()
        else "sqrt branch NOT multiplicative on rad f (defect -1 occurs)"
    )
    return failures, notes


def _units(n):
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def run_torus(env, rng, trials, window):
    ctx = env.ctx
    draw = _Draw(env, rng, window)
    failures = []
    one = TorusElement.monomial(ctx, (0,) * ctx.n)
    for _ in range(trials):
        a, b = draw.deg(), draw.deg()
        x = TorusElement.monomial(ctx, a, draw.scalar()) + TorusElement.monomial(
            ctx, draw.deg(), draw.scalar()
        )
        y = TorusElement.monomial(ctx, b, draw.scalar())
        z = TorusElement.monomial(ctx, draw.deg(), draw.scalar())
        inputs = {"x": str(x), "y": str(y), "z": str(z)}
        if (x * y) * z != x * (y * z):
            _fail(failures, "t_mul_associative", inputs, "nonzero")
        if x * one != x or one * x != x:
            _fail(failures, "t_unit", inputs, "nonzero")
        ta = TorusElement.monomial(ctx, a)
        tb = TorusElement.monomial(ctx, b)
        if ta * tb != (tb * ta).scaled(ctx.f(a, b)):
            _fail(failures, "quantum_commutation", {"a": _sdeg(a), "b": _sdeg(b)}, "nonzero")
        if x.bracket(y) + y.bracket(x):
            _fail(failures, "bracket_antisymmetric", inputs, "nonzero")
        jac = (
            x.bracket(y).bracket(z)
            + y.bracket(z).bracket(x)
            + z.bracket(x).bracket(y)
        )
        if jac:
            _fail(failures, "bracket_jacobi", inputs, str(jac))
        comm, central = (x + z).decompose()
        if comm + central != x + z:
            _fail(failures, "decompose_reassembles", inputs, "nonzero")
        if any(not ctx.in_radf(d) for d in central.support()) or any(
            ctx.in_radf(d) for d in comm.support()
        ):
            _fail(failures, "decompose_split_by_radical", inputs, "wrong support")
        if central:
            w = TorusElement.monomial(ctx, draw.deg(), draw.scalar())
            if central.bracket(w):
                _fail(failures, "central_part_commutes", inputs, "nonzero")
        for d in comm.support():
            wit = commutator_witness(ctx, d, window)
            if wit is None:
                _fail(failures, "commutator_witness_found", {"degree": _sdeg(d)}, "none")
            else:
                r, s = wit
                br = TorusElement.monomial(ctx, r).bracket(TorusElement.monomial(ctx, s))
                if br.support() != [d] or not br.coeff(d):
                    _fail(failures, "commutator_witness_valid", {"degree": _sdeg(d)}, str(br))
    return failures, []


def run_lie(env, rng, trials, window):
    ctx = env.ctx
    alg = env.alg
    draw = _Draw(env, rng, window)
    failures = []
    for _ in range(trials):
        x, y, z = draw.g_monomial(), draw.g_monomial(), draw.g_monomial()
        inputs = {"x": format_g(x), "y": format_g(y), "z": format_g(z)}
        if x.bracket(y) + y.bracket(x):
            _fail(failures, "g_antisymmetric", inputs, format_g(x.bracket(y) + y.bracket(x)))
        jac = (
            x.bracket(y).bracket(z)
            + y.bracket(z).bracket(x)
            + z.bracket(x).bracket(y)
        )
        if not jac.is_zero():
            _fail(failures, "g_jacobi", inputs, format_g(jac))
        # derivations act as derivations on the torus product
        der = draw.g_monomial("D" if not draw.nonradf or rng.random() < 0.5 else "ad")
        ta = TorusElement.monomial(ctx, draw.deg(), draw.scalar())
        tb = TorusElement.monomial(ctx, draw.deg(), draw.scalar())
        lhs = der.bracket(GElement.from_torus(ta * tb)).torus_part()
        rhs = der.bracket(GElement.from_torus(ta)).torus_part() * tb + ta * der.bracket(
            GElement.from_torus(tb)
        ).torus_part()
        if lhs != rhs:
            _fail(
                failures,
                "derivation_leibniz",
                {"d": format_g(der), "a": str(ta), "b": str(tb)},
                str(lhs - rhs),
            )
        # inner keys stay outside the radical, witt keys inside
        for w in (x.bracket(y), jac):
            if any(ctx.in_radf(a) for a in w.inner) or any(
                not ctx.in_radf(a) for a in w.witt
            ):
                _fail(failures, "bracket_species_shape", inputs, "misplaced degree")
        # loop level
        lx, ly, lz = draw.loop_monomial(), draw.loop_monomial(), draw.loop_monomial()
        linp = {"x": format_loop(lx), "y": format_loop(ly), "z": format_loop(lz)}
        if tau_bracket(lx, ly) + tau_bracket(ly, lx):
            _fail(failures, "tau_antisymmetric", linp, "nonzero")
        ljac = (
            tau_bracket(tau_bracket(lx, ly), lz)
            + tau_bracket(tau_bracket(ly, lz), lx)
            + tau_bracket(tau_bracket(lz, lx), ly)
        )
        if not ljac.is_zero():
            _fail(failures, "tau_jacobi", linp, format_loop(ljac))
        b1, b2 = draw.b_elem(), draw.b_elem()
        if (b1 * b2).psi() != b1.psi() * b2.psi():
            _fail(
                failures,
                "psi_multiplicative",
                {"b1": format_b(b1), "b2": format_b(b2)},
                "nonzero",
            )
        if psi_kernel_element(b1).psi():
            _fail(failures, "psi_kernel", {"b": format_b(b1)}, format_scalar(psi_kernel_element(b1).psi()))
        # ad is a Lie map from the torus commutator algebra
        ta2 = TorusElement.monomial(ctx, draw.deg(), draw.scalar())
        tb2 = TorusElement.monomial(ctx, draw.deg(), draw.scalar())
        i1, i2 = draw.b_exp(), draw.b_exp()
        prod = alg.mul_basis(i1, i2)
        lhs2 = (
            cq2_embed(ta2.bracket(tb2), alg, prod)
            if prod is not None
            else LoopElement.zero(ctx, alg)
        )
        rhs2 = tau_bracket(cq2_embed(ta2, alg, i1), cq2_embed(tb2, alg, i2))
        if lhs2 - rhs2:
            _fail(
                failures,
                "cq2_embed_lie_map",
                {"a": str(ta2), "b": str(tb2), "i": i1, "j": i2},
                format_loop(lhs2 - rhs2),
            )
        # the degree-zero pieces commute (Cartan-like behaviour)
        u, v = draw.uvec(), draw.uvec()
        zero = (0,) * ctx.n
        if GElement.D(ctx, u, zero).bracket(GElement.D(ctx, v, zero)):
            _fail(failures, "h_abelian", {"u": "..."}, "nonzero")
    return failures, []


def run_rep(env, rng, trials, window):
    params = env.params
    draw = _Draw(env, rng, window)
    failures = []
    notes = []
    species = draw._species()
    if "ad" not in species:
        notes.append("no degrees outside rad f in this context; ad species skipped")
    pair_cycle = [(a, b) for a in species for b in species]
    for t in range(trials):
        xi = draw.fvec()
        sx, sy = pair_cycle[t % len(pair_cycle)]
        x = draw.loop_monomial(sx)
        y = draw.loop_monomial(sy)
        inputs = {"x": format_loop(x), "y": format_loop(y), "xi": format_fvector(xi)}
        res = fock.rep_check(x, y, xi)
        if res:
            _fail(failures, "rep_bracket", inputs, format_fvector(res))
        if fock.rep_check(x, x, xi):
            _fail(failures, "rep_bracket_self", inputs, "nonzero")
        res = fock.unit_check(params, xi)
        if res:
            _fail(failures, "unit_acts_as_identity", {"xi": format_fvector(xi)}, format_fvector(res))
        u = draw.uvec()
        s = draw.deg()
        v = draw.vvec()
        res = fock.weight_check(params, u, s, v)
        if res:
            _fail(
                failures,
                "weight_eigenvalue",
                {"u": [str(c) for c in u], "s": _sdeg(s)},
                format_fvector(res),
            )
        pieces = fock.weight_decompose(xi)
        total = fock.FVector.zero(params)
        for _, comp in pieces:
            total = total + comp
        if total != xi:
            _fail(failures, "weight_decompose_reassembles", {"xi": format_fvector(xi)}, "nonzero")
        for deg, comp in pieces:
            for e in _units(params.ctx.n):
                res = fock.weight_check(params, e, deg, comp.component(deg))
                if res:
                    _fail(failures, "weight_component_eigen", {"deg": _sdeg(deg)}, format_fvector(res))
        # linearity spot checks
        c = draw.scalar()
        if fock.act(x, xi.scaled(c)) != fock.act(x, xi).scaled(c):
            _fail(failures, "act_linear_in_vector", inputs, "nonzero")
        if fock.act(x + y, xi) != fock.act(x, xi) + fock.act(y, xi):
            _fail(failures, "act_linear_in_element", inputs, "nonzero")
    return failures, notes


def run_section3(env, rng, trials, window):
    params = env.params
    ctx = env.ctx
    draw = _Draw(env, rng, window)
    failures = []
    notes = []
    have_nonradf = bool(draw.nonradf)
    if not have_nonradf:
        notes.append("rad f is everything here; checks needing s outside rad f skipped")
    if not ctx.branch_coherent():
        notes.append("sqrt branch defect -1 present: eta residual (i) is expected to flag it")
    for _ in range(trials):
        xi = draw.fvec()
        sxi = format_fvector(xi)
        u, v = draw.uvec(), draw.uvec()
        r, s2 = draw.radf_deg(), draw.radf_deg()
        b1, b2, b3, b4 = (draw.b_elem() for _ in range(4))
        binp = {"b1": format_b(b1), "b2": format_b(b2), "b3": format_b(b3), "b4": format_b(b4)}
        a, b = draw.deg(), draw.deg()
        res = fock.assoc_check(params, a, b, b1, b2, xi)
        if res:
            _fail(failures, "assoc", {"r": _sdeg(a), "s": _sdeg(b), **binp, "xi": sxi}, format_fvector(res))
        res = fock.antiassoc_check(params, a, b, b1, b2, xi)
        if res:
            _fail(failures, "antiassoc", {"r": _sdeg(a), "s": _sdeg(b), **binp, "xi": sxi}, format_fvector(res))
        res = fock.eq31_check(params, a, b, b2, b4, xi)
        if res:
            _fail(failures, "eq31", {"r": _sdeg(a), "s": _sdeg(b), **binp, "xi": sxi}, format_fvector(res))
        inputs = {
            "u": [str(c) for c in u], "v": [str(c) for c in v],
            "r": _sdeg(r), "s": _sdeg(s2), **binp, "xi": sxi,
        }
        res = fock.t_bracket_structure_check(params, u, v, r, s2, b1, b2, b3, b4, xi)
        if res:
            _fail(failures, "t_bracket_structure", inputs, format_fvector(res))
        res = fock.tprime_bracket_check(params, u, v, r, s2, b1, b2, b3, b4, xi)
        if res:
            _fail(failures, "tprime_bracket_structure", inputs, format_fvector(res))
        res_i, res_ii = fock.eta_check(params, u, v, r, s2, b1, b2, b3, b4, xi)
        if res_i:
            _fail(failures, "eta_transport_i", inputs, format_fvector(res_i))
        if res_ii:
            _fail(failures, "eta_transport_ii", inputs, format_fvector(res_ii))
        res = fock.dtilde_check(params, u, r, b1, b2, xi)
        if res:
            _fail(failures, "dtilde_annihilates", inputs, format_fvector(res))
        res = fock.d0_commutes_check(params, v, u, r, b1, b2, xi)
        if res:
            _fail(failures, "d0_commutes_with_T", inputs, format_fvector(res))
        if not fock.t_degree_check(params, u, r, b1, b2, draw.deg(), draw.vvec()):
            _fail(failures, "T_preserves_degree", inputs, "support moved")
        k = draw.deg()
        res = fock.tprime_commutes_with_t(params, u, r, b1, b2, k, xi)
        if res:
            _fail(failures, "tprime_commutes_with_t", {**inputs, "k": _sdeg(k)}, format_fvector(res))
        vv = draw.vvec()
        res = fock.lambda_check(params, u, b1, vv)
        if res:
            _fail(failures, "lambda_scalar", inputs, format_fvector(res))
        res = fock.eq32_check(params, u, b1, k, vv)
        if res:
            _fail(failures, "eq32", {**inputs, "k": _sdeg(k)}, format_fvector(res))
        res = fock.eq35_check(params, u, r, b1, k, vv)
        if res:
            _fail(failures, "eq35", {**inputs, "k": _sdeg(k)}, format_fvector(res))
        res = fock.eq36_check(params, u, r, k, vv)
        if res:
            _fail(failures, "eq36", {**inputs, "k": _sdeg(k)}, format_fvector(res))
        res = fock.eq38_check(params, u, r, b1, xi)
        if res:
            _fail(failures, "eq38", inputs, format_fvector(res))
        el = fock.eq37_residual(params, v, u, r, b1)
        if el:
            _fail(failures, "eq37_element", inputs, format_loop(el))
        m = draw.deg()
        wgen = fock.w_generator(params, m, vv)
        if any(fock.proj0(wgen)):
            _fail(failures, "proj0_kills_w", {"m": _sdeg(m)}, "nonzero")
        v0 = fock.FVector.basis(params, params.zero_deg, vv)
        if fock.proj0(v0) != tuple(v0.component(params.zero_deg)):
            _fail(failures, "proj0_degree0_identity", {"v": "..."}, "nonzero")
        resv = fock.proj0_intertwine_check(params, u, r, b1, b2, xi)
        if any(resv):
            _fail(failures, "proj0_intertwines_tprime", inputs, str([format_scalar(c) for c in resv]))
        if have_nonradf:
            sn, rn = draw.nonradf_deg(), draw.nonradf_deg()
            ninp = {"r": _sdeg(rn), "s": _sdeg(sn), **binp, "xi": sxi}
            res = fock.prop31_check(params, rn, sn, b1, b2, b3, b4, xi)
            if res:
                _fail(failures, "prop31_ideal_abelian", ninp, format_fvector(res))
            res = fock.lemma32_check(params, u, r, sn, b1, b2, b3, b4, xi)
            if res:
                _fail(failures, "lemma32", {**ninp, "u": inputs["u"]}, format_fvector(res))
            res = fock.adb_scalar_check(params, sn, b1, xi)
            if res:
                _fail(failures, "adb_scalar", ninp, format_fvector(res))
    return failures, notes


def run_probe(env, rng, trials, window):
    del rng, trials  # the probe is seeded separately for reproducibility
    params = env.params
    result = fock.cyclicity_probe(params, window, env.scenario.seed)
    notes = []
    if not result.saturated:
        notes.append(
            f"span reached {result.span_dim}/{result.target_dim} in window "
            f"{window}: counterexample candidate (window effects possible)"
        )
    if any(r < result.orbit_target for r in result.orbit_ranks):
        notes.append("some T-orbit did not fill its weight space: candidate only")
    return [], notes, result.as_dict()


SUITE_FUNCS = {
    "cocycle": run_cocycle,
    "torus": run_torus,
    "lie": run_lie,
    "rep": run_rep,
    "section3": run_section3,
    "lattice": run_lattice,
    "probe": run_probe,
}


def run_suites(env, names, seed, trials, window, probe_window):
    """Run the named suites in order; returns a list of SuiteResult."""
    results = []
    for name in names:
        fn = SUITE_FUNCS[name]
        rng = random.Random(f"{seed}/{name}")
        t0 = time.perf_counter()
        if name == "probe":
            failures, notes, detail = fn(env, rng, trials, probe_window)
        else:
            failures, notes = fn(env, rng, trials, window)
            detail = None
        wall = time.perf_counter() - t0
        results.append(
            SuiteResult(
                name=name,
                trials=trials if name != "probe" else 1,
                failures=failures,
                wall_time_s=wall,
                notes=notes,
                detail=detail,
            )
        )
    return results
