"""Named property suite behind the CLI ``verify`` command.

Every check is a pure function returning a CheckResult; run_suite executes
them at the requested sizes and collects pass/fail plus a numeric detail
(usually the measured defect and its tolerance). Tolerances mirror the
module-level invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cosh import (
    WeightParam,
    condition_estimate,
    cosh_forward,
    cosh_invert_direct,
    cosh_invert_mean_constrained,
    cosh_invert_neumann,
    kernel,
    null_experiment,
)
from .fht import (
    Flavor,
    coeffs_from_sgrid,
    coeffs_from_tgrid,
    fht_forward_d,
    fht_forward_m,
    fht_inverse_d,
    fht_inverse_m,
    m_analysis_sgrid,
    plancherel_check,
    range_defect,
)
from .grids import (
    Basis,
    ChebCoeffs,
    GridFn,
    GridKind,
    ResampleMode,
    Space,
    cgl_nodes,
    cheb_eval,
    inner_product,
    norm,
    resample,
    weight_w,
)
from .oracle import pair, pv_fht
from .transforms import TransformKind, build


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, measured: float, tol: float) -> CheckResult:
    return CheckResult(
        name=name,
        passed=bool(measured <= tol),
        detail=f"measured={measured:.3e} tol={tol:.1e}",
    )


# ---------------------------------------------------------------------------
# cheb_core checks

def check_grid_formulas(n: int) -> CheckResult:
    sg = cgl_nodes(GridKind.SNODES, n)
    tg = cgl_nodes(GridKind.TNODES, n)
    ug = cgl_nodes(GridKind.UNODES, n)
    err = max(
        float(np.max(np.abs(sg.nodes - np.cos((np.arange(n) + 0.5) * np.pi / n)))),
        float(np.max(np.abs(tg.nodes - np.cos(np.arange(n) * np.pi / n)))),
        float(np.max(np.abs(ug.nodes - np.cos(np.arange(1, n + 1) * np.pi / (n + 1))))),
        abs(tg.nodes[0] - 1.0),
    )
    return _result(f"grid_formulas_n{n}", err, 0.0)


def check_quadrature_t(n: int) -> CheckResult:
    sg = cgl_nodes(GridKind.SNODES, n)
    worst = 0.0
    for i in range(0, 9):
        for j in range(0, 9):
            fi = GridFn(sg, cheb_eval(Basis.FIRST_T, i, sg.nodes))
            fj = GridFn(sg, cheb_eval(Basis.FIRST_T, j, sg.nodes))
            got = inner_product(fi, fj, Space.LD2)
            want = 1.0 if i == j == 0 else (0.5 if i == j else 0.0)
            worst = max(worst, abs(got - want))
    return _result(f"quadrature_exact_T_n{n}", worst, 1e-13)


def check_quadrature_u(n: int) -> CheckResult:
    ug = cgl_nodes(GridKind.UNODES, n)
    worst = 0.0
    for i in range(0, 9):
        for j in range(0, 9):
            fi = GridFn(ug, cheb_eval(Basis.SECOND_U, i, ug.nodes))
            fj = GridFn(ug, cheb_eval(Basis.SECOND_U, j, ug.nodes))
            got = inner_product(fi, fj, Space.LM2)
            want = 0.5 if i == j else 0.0
            worst = max(worst, abs(got - want))
    return _result(f"quadrature_exact_U_n{n}", worst, 1e-13)


def check_cheb_trig() -> CheckResult:
    worst = 0.0
    for theta in (0.1, 0.7, 2.5):
        x = math.cos(theta)
        for k in range(65):
            worst = max(worst, abs(cheb_eval(Basis.FIRST_T, k, x) - math.cos(k * theta)))
            worst = max(
                worst,
                abs(cheb_eval(Basis.SECOND_U, k, x) * math.sin(theta)
                    - math.sin((k + 1) * theta)),
            )
    return _result("cheb_trig_identities", worst, 1e-12)


# ---------------------------------------------------------------------------
# trig_transforms checks

def check_c3_orthogonality(n: int) -> CheckResult:
    c3 = build(TransformKind.C3, n).entries
    err = float(np.max(np.abs(c3.T @ c3 - np.eye(n))))
    return _result(f"c3_orthogonality_n{n}", err, 1e-12)


def check_s1_diagonal(n: int) -> CheckResult:
    s1 = build(TransformKind.S1, n).entries
    d = np.eye(n)
    d[0, 0] = 0.0
    err = float(np.max(np.abs(s1.T @ s1 - d)))
    return _result(f"s1_diagonal_n{n}", err, 1e-12)


def check_m_analysis_roundtrip(n: int) -> CheckResult:
    rng = np.random.default_rng(7)
    d = rng.standard_normal(n)
    d[-1] = 0.0  # T_N vanishes at every S-node; that coefficient is invisible
    sg = cgl_nodes(GridKind.SNODES, n)
    tcoeffs = np.concatenate(([0.0], d))
    f = resample(ChebCoeffs(Basis.FIRST_T, tcoeffs), sg.nodes, ResampleMode.T_SERIES)
    _, got = m_analysis_sgrid(GridFn(sg, f / sg.weights))
    return _result(f"m_analysis_roundtrip_n{n}", float(np.max(np.abs(got - d))), 1e-10)


# ---------------------------------------------------------------------------
# fht_spectral checks

def check_d_roundtrip(n: int) -> CheckResult:
    rng = np.random.default_rng(11)
    tg = cgl_nodes(GridKind.TNODES, n)
    f = rng.standard_normal(n)
    f[0] = 0.0
    back = fht_inverse_d(fht_forward_d(GridFn(tg, f)))
    return _result(f"d_roundtrip_n{n}", float(np.max(np.abs(back.values - f))), 1e-12)


def check_forward_d_pair(n: int) -> CheckResult:
    tg = cgl_nodes(GridKind.TNODES, n)
    F = fht_forward_d(GridFn(tg, tg.weights))
    err = float(np.max(np.abs(F.values - F.grid.nodes)))
    return _result(f"forward_d_unit_circle_n{n}", err, 1e-12)


def check_isometry_d(n: int) -> CheckResult:
    tg = cgl_nodes(GridKind.TNODES, n)
    worst = 0.0
    for k in (0, 1, 5, min(30, n - 2)):
        f = GridFn(tg, tg.weights * cheb_eval(Basis.SECOND_U, k, tg.nodes))
        rep = plancherel_check(f, Flavor.D)
        worst = max(worst, rep.defect)
    return _result(f"isometry_d_n{n}", worst, 1e-10)


def check_isometry_m(n: int) -> CheckResult:
    sg = cgl_nodes(GridKind.SNODES, n)
    worst = 0.0
    for k in (0, 1, 5, min(30, n - 2)):
        f = GridFn(sg, cheb_eval(Basis.FIRST_T, k + 1, sg.nodes) / sg.weights)
        F = fht_forward_m(f)
        worst = max(worst, abs(norm(F, Space.LM2) ** 2 - 0.5))
    return _result(f"isometry_m_n{n}", worst, 1e-10)


def check_plancherel_suite(n: int) -> CheckResult:
    tg = cgl_nodes(GridKind.TNODES, n)
    sg = cgl_nodes(GridKind.SNODES, n)
    worst = 0.0
    for k in range(31):
        f = GridFn(tg, tg.weights * cheb_eval(Basis.SECOND_U, k, tg.nodes))
        worst = max(worst, plancherel_check(f, Flavor.D).defect)
    u0 = cheb_eval(Basis.SECOND_U, 0, sg.nodes)
    u2 = cheb_eval(Basis.SECOND_U, 2, sg.nodes)
    for vals in (sg.weights * u0, sg.weights * (u0 + u2)):
        worst = max(worst, plancherel_check(GridFn(sg, vals), Flavor.M).defect)
    # zero-mean case: w U_1 integrates to zero by parity
    u1 = cheb_eval(Basis.SECOND_U, 1, sg.nodes)
    rep = plancherel_check(GridFn(sg, sg.weights * u1), Flavor.M)
    worst = max(worst, rep.defect)
    return _result(f"plancherel_suite_n{n}", worst, 1e-10)


def check_lemma2_inequality(n: int) -> CheckResult:
    """||F||_Lm^2 <= ||f||_Lm^2 for real f; the right side is ||f w||_Ld^2,
    which the S-node rule integrates exactly, so any samples qualify."""
    rng = np.random.default_rng(3)
    sg = cgl_nodes(GridKind.SNODES, n)
    worst = 0.0
    for _ in range(5):
        f = GridFn(sg, rng.standard_normal(n))
        lhs = norm(fht_forward_m(f), Space.LM2) ** 2
        full = norm(GridFn(sg, f.values * sg.weights), Space.LD2) ** 2
        worst = max(worst, lhs - full)
    return _result(f"lemma2_inequality_n{n}", max(worst, 0.0), 1e-10)


def check_range_defect(n: int) -> CheckResult:
    rng = np.random.default_rng(5)
    tg = cgl_nodes(GridKind.TNODES, n)
    f = rng.standard_normal(n)
    f[0] = 0.0
    F = fht_forward_d(GridFn(tg, f))
    return _result(f"range_defect_n{n}", abs(range_defect(F)), 1e-12)


def check_oracle_agreement(n: int = 256) -> CheckResult:
    pr = pair("shifted")
    tg = cgl_nodes(GridKind.TNODES, n)
    f = GridFn(tg, pr.f(tg.nodes))
    F = fht_forward_d(f)
    a = coeffs_from_tgrid(f)
    Fcoef = coeffs_from_sgrid(F)

    def interp(t):
        return resample(a, t, ResampleMode.WU_SERIES)

    worst = 0.0
    for s in (-0.5, 0.0, 0.3, 0.85):
        orc = pv_fht(interp, s, 8192)
        spe = resample(Fcoef, s, ResampleMode.T_SERIES)
        worst = max(worst, abs(orc - spe))
    return _result(f"oracle_agreement_n{n}", worst, 1e-5)


# ---------------------------------------------------------------------------
# cosh_solver checks

def check_degeneration(n: int) -> CheckResult:
    rng = np.random.default_rng(13)
    tg = cgl_nodes(GridKind.TNODES, n)
    f = rng.standard_normal(n)
    f[0] = 0.0
    p0 = WeightParam.cosh_real(0.0)
    fwd_a = cosh_forward(GridFn(tg, f), p0).values
    fwd_b = fht_forward_d(GridFn(tg, f)).values
    sg = cgl_nodes(GridKind.SNODES, n)
    F = rng.standard_normal(n)
    inv_a, _ = cosh_invert_direct(GridFn(sg, F), p0)
    inv_b = fht_inverse_d(GridFn(sg, F))
    err = max(float(np.max(np.abs(fwd_a - fwd_b))),
              float(np.max(np.abs(inv_a.values - inv_b.values))))
    return _result(f"degeneration_mu0_n{n}", err, 1e-14)


def check_coerciveness(n: int = 128) -> CheckResult:
    tg = cgl_nodes(GridKind.TNODES, n)
    worst = 0.0
    for mu in (0.5, 1.0, 2.0):
        p = WeightParam.cosh_real(mu)
        floor = p.coercive_const
        for k in range(n - 1):
            f = GridFn(tg, tg.weights * cheb_eval(Basis.SECOND_U, k, tg.nodes))
            ratio = norm(cosh_forward(f, p), Space.LD2) / norm(
                GridFn(cgl_nodes(GridKind.SNODES, n),
                       resample(coeffs_from_tgrid(f),
                                cgl_nodes(GridKind.SNODES, n).nodes,
                                ResampleMode.WU_SERIES)), Space.LD2)
            worst = max(worst, floor - ratio)
    return _result("coerciveness_mu_0.5_1_2", max(worst, 0.0), 1e-8)


def check_contraction(n: int = 128) -> CheckResult:
    tg = cgl_nodes(GridKind.TNODES, n)
    f = tg.weights * (1.0 + 0.3 * tg.nodes)
    worst = 0.0
    params = [WeightParam.cosh_real(m) for m in (0.5, 1.0)]
    params += [WeightParam.cos_imaginary(e) for e in (0.3, 0.5)]
    for p in params:
        F = cosh_forward(GridFn(tg, f), p)
        _, rep = cosh_invert_neumann(F, p, tol=1e-12)
        worst = max(worst, rep.measured_ratio - (p.contraction + 0.02))
    return _result("contraction_ratios", max(worst, 0.0), 0.0)


def check_direct_neumann_agreement(n: int = 128) -> CheckResult:
    tg = cgl_nodes(GridKind.TNODES, n)
    f = tg.weights * (1.0 - 0.4 * tg.nodes + 0.2 * (2 * tg.nodes ** 2 - 1))
    worst = 0.0
    for mu in (0.5, 1.0):
        p = WeightParam.cosh_real(mu)
        F = cosh_forward(GridFn(tg, f), p)
        fd, _ = cosh_invert_direct(F, p)
        fn, _ = cosh_invert_neumann(F, p, tol=1e-12)
        diff = fd.values - fn.values
        worst = max(worst, float(np.sqrt(np.sum(diff[1:] ** 2) / n)))
    return _result("direct_neumann_agreement", worst, 1e-8)


def check_condition(p: WeightParam, n: int = 256) -> CheckResult:
    est = condition_estimate(p, n)
    excess = est.measured - est.bound * (1.0 + 1e-6)
    name = f"condition_bound_{p.flavor.value}_{p.value:g}_n{n}"
    return _result(name, max(excess, 0.0), 0.0)


def check_kernel_parity(n: int = 64) -> CheckResult:
    """Both kernels are even: they are transforms of the odd slope function."""
    p = WeightParam.cosh_real(1.0)
    worst = 0.0
    for kind in ("Kd", "Km"):
        k = kernel(kind, p, cgl_nodes(GridKind.SNODES, n))
        vals = k.values
        worst = max(worst, float(np.max(np.abs(vals - vals[::-1]))))
    return _result("kernel_even_parity", worst, 1e-10)


def check_kernel_oracle() -> CheckResult:
    # Reference: theta-substituted PV quadrature of tanh(s)/((s-t) pi w(s))
    # at t = 0.3, mu = 1, frozen after a doubled-resolution confirmation.
    ref = 0.8463690558
    p = WeightParam.cosh_real(1.0)
    k = kernel("Kd", p, cgl_nodes(GridKind.TNODES, 128))
    got = resample(k.series, 0.3, ResampleMode.WU_SERIES) / weight_w(0.3)
    return _result("kernel_Kd_oracle_t0.3", abs(got - ref), 1e-6)


def _kd_equivalence(n: int = 32, mu: float = 1.0, mq: int = 20001) -> float:
    """Max-norm gap between the composite operator M and its kernel form (d)."""
    p = WeightParam.cosh_real(mu)
    tg = cgl_nodes(GridKind.TNODES, n)
    fv = tg.weights * (1.0 + 0.5 * tg.nodes - 0.3 * (2 * tg.nodes ** 2 - 1))
    from .cosh import system_matrix

    lhs = (np.eye(n) - system_matrix(p, n)) @ fv
    kd = kernel("Kd", p, tg)
    a = coeffs_from_tgrid(GridFn(tg, fv))

    h = 2.0 / mq
    uq = -1.0 + (np.arange(mq) + 0.5) * h
    kdu = resample(kd.series, uq, ResampleMode.WU_SERIES) / weight_w(uq)
    fu = resample(a, uq, ResampleMode.WU_SERIES)
    tu = p.slope(uq)
    rhs = np.empty(n)
    for i, t in enumerate(tg.nodes):
        base = p.slope(t) ** 2 * fv[i]
        if i == 0:
            rhs[i] = base  # w(1) = 0 kills the integral term
            continue
        kdt = resample(kd.series, t, ResampleMode.WU_SERIES) / weight_w(t)
        dq = (kdt - kdu) / (t - uq)
        rhs[i] = base + weight_w(t) * np.sum(dq * tu * fu) * h / np.pi
    return float(np.max(np.abs(lhs - rhs)))


def _km_equivalence(n: int = 32, mu: float = 1.0, mq: int = 20001) -> float:
    """Max-norm gap for the multiplication flavor, theta-substituted quadrature."""
    p = WeightParam.cosh_real(mu)
    sg = cgl_nodes(GridKind.SNODES, n)
    ug = cgl_nodes(GridKind.UNODES, n)
    fS = (sg.nodes + 0.4 * cheb_eval(Basis.FIRST_T, 3, sg.nodes)) / sg.weights
    slope_s = p.slope(sg.nodes)
    slope_u = p.slope(ug.nodes)
    inner = fht_forward_m(GridFn(sg, slope_s * fS))
    lhs = fht_inverse_m(GridFn(ug, slope_u * inner.values)).values

    km = kernel("Km", p, sg)
    c0, dc = m_analysis_sgrid(GridFn(sg, fS))
    tcoeffs = np.concatenate(([c0], dc))
    km_coeffs = np.concatenate(([0.0], km.series.coeffs))

    hq = np.pi / mq
    phq = (np.arange(mq) + 0.5) * hq
    uq = np.cos(phq)
    g = resample(ChebCoeffs(Basis.FIRST_T, tcoeffs), uq, ResampleMode.T_SERIES)
    kmu = resample(ChebCoeffs(Basis.FIRST_T, km_coeffs), uq, ResampleMode.T_SERIES)
    tu = p.slope(uq)
    rhs = np.empty(n)
    for i, t in enumerate(sg.nodes):
        kmt = resample(ChebCoeffs(Basis.FIRST_T, km_coeffs), t, ResampleMode.T_SERIES)
        dq = (kmt - kmu) / (t - uq)
        rhs[i] = p.slope(t) ** 2 * fS[i] - np.sum(dq * tu * g) * hq / (np.pi * sg.weights[i])
    return float(np.max(np.abs(lhs - rhs)))


def check_kernel_equivalence() -> CheckResult:
    err = max(_kd_equivalence(), _km_equivalence())
    return _result("kernel_form_equivalence_n32", err, 1e-3)


def check_mean_constrained(n: int = 128) -> CheckResult:
    p = WeightParam.cosh_real(0.5)
    tg = cgl_nodes(GridKind.TNODES, n)
    ug = cgl_nodes(GridKind.UNODES, n)
    sg = cgl_nodes(GridKind.SNODES, n)

    def fex(t):
        return 2.0 * t * weight_w(t)

    F = cosh_forward(GridFn(tg, fex(tg.nodes)), p)
    Fu = resample(coeffs_from_sgrid(F), ug.nodes, ResampleMode.T_SERIES)
    gx, gw = np.polynomial.legendre.leggauss(200)
    fbar = 0.5 * float(np.sum(gw * p.scale(gx) * fex(gx)))
    got, rep = cosh_invert_mean_constrained(GridFn(ug, Fu), p, fbar, tol=1e-12)
    want = fex(sg.nodes)
    rel = float(np.linalg.norm(got.values - want) / np.linalg.norm(want))
    ok = rep.converged and rel <= 1e-6
    return CheckResult(
        name="mean_constrained_roundtrip",
        passed=ok,
        detail=f"measured={rel:.3e} tol=1.0e-06 iters={rep.iterations}",
    )


def check_cos_flavor_roundtrip(n: int = 128) -> CheckResult:
    p = WeightParam.cos_imaginary(0.5)
    tg = cgl_nodes(GridKind.TNODES, n)
    f = tg.weights * cheb_eval(Basis.SECOND_U, 2, tg.nodes)
    F = cosh_forward(GridFn(tg, f), p)
    got, _ = cosh_invert_direct(F, p)
    err = float(np.max(np.abs(got.values[1:] - f[1:])))
    return _result("cos_flavor_roundtrip", err, 1e-8)


def check_null_experiment() -> CheckResult:
    rows = null_experiment(WeightParam.cosh_real(3.0), [64, 128])
    ok = (
        len(rows) == 2
        and rows[0].n < rows[1].n
        and all(math.isfinite(r.norm_d) and math.isfinite(r.norm_m) for r in rows)
    )
    return CheckResult("null_experiment_runs", ok, f"rows={len(rows)}")


# ---------------------------------------------------------------------------

def run_suite(sizes=(64, 256), weight: WeightParam | None = None) -> list[CheckResult]:
    """Run every named check; returns results in a stable order."""
    results: list[CheckResult] = []
    for n in sizes:
        results.append(check_grid_formulas(n))
        results.append(check_quadrature_t(n))
        results.append(check_quadrature_u(n))
        results.append(check_c3_orthogonality(n))
        results.append(check_s1_diagonal(n))
        results.append(check_m_analysis_roundtrip(n))
        results.append(check_d_roundtrip(n))
        results.append(check_forward_d_pair(n))
        results.append(check_isometry_d(n))
        results.append(check_isometry_m(n))
        results.append(check_plancherel_suite(n))
        results.append(check_lemma2_inequality(n))
        results.append(check_range_defect(n))
        results.append(check_degeneration(n))
    results.append(check_cheb_trig())
    results.append(check_oracle_agreement())
    results.append(check_coerciveness())
    results.append(check_contraction())
    results.append(check_direct_neumann_agreement())
    results.append(check_kernel_parity())
    results.append(check_kernel_oracle())
    results.append(check_kernel_equivalence())
    results.append(check_mean_constrained())
    results.append(check_cos_flavor_roundtrip())
    results.append(check_null_experiment())
    if weight is not None:
        results.append(check_condition(weight))
    return results
