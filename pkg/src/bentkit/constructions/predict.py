"""Walsh-spectrum predictors for f(x) = g(x) + F(Tr(u_1 x), ..., Tr(u_tau x)).

Every predictor works one b at a time and returns ``(sign, exponent)`` with

    f^(b) = sign * U * w^exponent

where U is the exact unit scale of g (mu^-1 p^(n/2)).  The driver
:func:`predict` assembles full spectra and reports structural failures as
:class:`NotApplicable`, which is distinct from a prediction of "not bent".
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import cyclo
from ..cyclo import eta
from ..dualshift import DualExpansion, NotExpansionForm, fit_expansion
from ..func import PFunc, ReducedPoly, TraceComposition, compose
from ..walsh import RegularityReport, WalshSpectrum, classify, walsh_full
from .restrict import NotApplicable, affine_parts, quadratic_parts, restrict_poly


class PivotDegenerate(NotApplicable):
    """The elimination hits a zero pivot, so no verdict is available."""


@dataclass
class Prepared:
    g: PFunc
    F: ReducedPoly
    points: tuple
    report: RegularityReport
    expansion: DualExpansion

    @property
    def ctx(self):
        return self.g.ctx

    @property
    def p(self) -> int:
        return self.g.ctx.p

    @property
    def A(self) -> np.ndarray:
        return self.expansion.A

    def gd(self, b: int) -> int:
        return int(self.report.dual.values[b])

    def composition(self) -> TraceComposition:
        return TraceComposition(self.g, self.F, self.points)


def prepare(g: PFunc, F: ReducedPoly, points, diag_override=None) -> Prepared:
    report = classify(g)
    if report.dual is None:
        raise NotApplicable(f"g is {report.kind}, a weakly regular bent g is required")
    try:
        exp = fit_expansion(report.dual, points, diag_override=diag_override)
    except NotExpansionForm as exc:
        raise NotApplicable(f"dual of g has no shift expansion: {exc}") from exc
    if F.arity != len(exp.points):
        raise NotApplicable("arity of F differs from the number of points")
    return Prepared(g, F, tuple(int(u) for u in points), report, exp)


def _inv(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError("division by zero in F_p")
    return pow(x, -1, p)


class _Cache(dict):
    """Memo for per-b work keyed by the tuple of fixed values."""


# -- binary predictors ---------------------------------------------------------

def _binary_only(prep: Prepared) -> None:
    if prep.p != 2:
        raise NotApplicable("this predictor is for p = 2")


def disjoint_pairs_setup(prep: Prepared) -> dict:
    _binary_only(prep)
    pairs = prep.expansion.off_diagonal_pairs()
    flat = [i for pr in pairs for i in pr]
    if len(flat) != len(set(flat)):
        raise NotApplicable(f"coupled index pairs {pairs} are not disjoint")
    return {"pairs": pairs, "gamma": sorted(flat), "cache": _Cache()}


def disjoint_pairs_at(prep: Prepared, st: dict, b: int) -> tuple[int, int]:
    h = prep.expansion.h_at(b)
    gamma = st["gamma"]
    fixed = {i: h[i] for i in range(len(h)) if i not in gamma}
    key = tuple(sorted(fixed.items()))
    if key not in st["cache"]:
        st["cache"][key] = affine_parts(restrict_poly(prep.F, fixed), gamma)
    coeffs, F0 = st["cache"][key]
    e = prep.gd(b) + F0
    for i, j in st["pairs"]:
        e += (h[i] + coeffs[j]) * (h[j] + coeffs[i]) + h[i] * h[j]
    return 1, e % 2


def star_setup(prep: Prepared) -> dict:
    _binary_only(prep)
    pairs = prep.expansion.off_diagonal_pairs()
    if not pairs:
        raise NotApplicable("no coupled indices")
    common = set(pairs[0])
    for pr in pairs[1:]:
        common &= set(pr)
    if not common:
        raise NotApplicable(f"coupled pairs {pairs} do not share one index")
    hub = min(common)
    leaves = sorted({i for pr in pairs for i in pr} - {hub})
    return {"hub": hub, "leaves": leaves, "gamma": sorted([hub] + leaves), "cache": _Cache()}


def star_at(prep: Prepared, st: dict, b: int) -> tuple[int, int]:
    h = prep.expansion.h_at(b)
    hub, leaves = st["hub"], st["leaves"]
    j1 = leaves[0]
    fixed = {i: h[i] for i in range(len(h)) if i not in st["gamma"]}
    subs = {j: (j1, 1, (h[j1] + h[j]) % 2) for j in leaves[1:]}
    key = (tuple(sorted(fixed.items())), tuple(sorted(subs.items())))
    if key not in st["cache"]:
        st["cache"][key] = affine_parts(restrict_poly(prep.F, fixed, subs), (hub, j1))
    coeffs, F0 = st["cache"][key]
    e = prep.gd(b) + (h[hub] + coeffs[j1]) * (h[j1] + coeffs[hub]) + h[hub] * h[j1] + F0
    return 1, e % 2


# -- odd characteristic ----------------------------------------------------------

def _odd_only(prep: Prepared) -> None:
    if prep.p == 2:
        raise NotApplicable("this predictor is for odd p")


def product_pair_setup(prep: Prepared) -> dict:
    _odd_only(prep)
    p = prep.p
    if prep.F != ReducedPoly.product(p, 2):
        raise NotApplicable("needs tau = 2 and F = x1*x2")
    A = prep.A
    disc = ((int(A[0, 1]) - 1) ** 2 - 4 * int(A[0, 0]) * int(A[1, 1])) % p
    return {"disc": disc}


def product_pair_at(prep: Prepared, st: dict, b: int) -> tuple[int, int]:
    p = prep.p
    A = prep.A
    disc = st["disc"]
    g1, g2 = prep.expansion.g_at(b)
    num = int(A[1, 1]) * g1 * g1 + int(A[0, 0]) * g2 * g2 - (int(A[0, 1]) - 1) * g1 * g2
    return eta(p, disc), (prep.gd(b) + num * _inv(disc, p)) % p


def _nonzero_support(A: np.ndarray) -> list[int]:
    tau = A.shape[0]
    return sorted({i for i in range(tau) for j in range(tau) if A[i, j]})


def quad_none_setup(prep: Prepared) -> dict:
    _odd_only(prep)
    if np.any(prep.A):
        raise NotApplicable("some expansion coefficient A_ij is nonzero")
    return {}


def quad_none_at(prep: Prepared, st: dict, b: int) -> tuple[int, int]:
    g = prep.expansion.g_at(b)
    return 1, (prep.gd(b) + prep.F(*g)) % prep.p


def quad_single_setup(prep: Prepared, pair=None) -> dict:
    _odd_only(prep)
    A = prep.A
    support = _nonzero_support(A)
    if len(support) != 1 or A[support[0], support[0]] == 0:
        raise NotApplicable("needs exactly one nonzero coefficient, on the diagonal")
    return {"t2": support[0], "cache": _Cache()}


def quad_single_at(prep: Prepared, st: dict, b: int) -> tuple[int, int]:
    p = prep.p
    t2 = st["t2"]
    g = prep.expansion.g_at(b)
    fixed = {i: g[i] for i in range(len(g)) if i != t2}
    key = tuple(sorted(fixed.items()))
    if key not in st["cache"]:
        st["cache"][key] = quadratic_parts(restrict_poly(prep.F, fixed), t2)
    q = st["cache"][key]
    a2, F2, F0 = q["a11"], q["F1"], q["F0"]
    A = int(prep.A[t2, t2])
    den = (1 - 4 * a2 * A) % p
    if den == 0:
        raise NotApplicable(f"a_2 - 1/(4A) vanishes at b={b}")
    inner = (F2 + g[t2] * _inv(2 * A, p)) % p
    e = prep.gd(b) + A * _inv(den, p) * inner * inner + F0 - g[t2] * g[t2] * _inv(4 * A, p)
    return eta(p, den), e % p


def _pick_pair(prep: Prepared, pair, want_diag_first: bool) -> tuple[int, int]:
    A = prep.A
    tau = A.shape[0]
    support = _nonzero_support(A)
    if pair is not None:
        t1, t2 = sorted(int(i) for i in pair)
        if not set(support) <= {t1, t2} or t1 == t2:
            raise NotApplicable(f"nonzero coefficients outside the chosen pair {pair}")
    elif len(support) == 2:
        t1, t2 = support
    elif len(support) == 1 and want_diag_first and tau >= 2:
        t1 = support[0]
        t2 = min(i for i in range(tau) if i != t1)
    else:
        raise NotApplicable(f"nonzero coefficients on indices {support} do not fit one pair")
    if want_diag_first and A[t1, t1] == 0 and A[t2, t2] != 0:
        t1, t2 = t2, t1
    return t1, t2


def quad_degenerate_pair_setup(prep: Prepared, pair=None) -> dict:
    _odd_only(prep)
    p = prep.p
    t1, t2 = _pick_pair(prep, pair, want_diag_first=True)
    A = prep.A
    a11, a12, a22 = int(A[t1, t1]), int(A[t1, t2]), int(A[t2, t2])
    if a11 == 0:
        raise NotApplicable("A_{t1 t1} must be nonzero")
    if (a12 * a12 - 4 * a11 * a22) % p:
        raise NotApplicable("A_{t1 t2}^2 - 4 A_{t1 t1} A_{t2 t2} must vanish")
    return {"t1": t1, "t2": t2, "cache": _Cache()}


def _two_var_parts(prep: Prepared, st: dict, g) -> dict:
    t1, t2 = st["t1"], st["t2"]
    fixed = {i: g[i] for i in range(len(g)) if i not in (t1, t2)}
    key = tuple(sorted(fixed.items()))
    if key not in st["cache"]:
        st["cache"][key] = quadratic_parts(restrict_poly(prep.F, fixed), t1, t2)
    return st["cache"][key]


def degenerate_pair_terms(prep: Prepared, st: dict, b: int) -> dict:
    """phi and alpha_1..alpha_3 at b."""
    p = prep.p
    t1, t2 = st["t1"], st["t2"]
    g = prep.expansion.g_at(b)
    q = _two_var_parts(prep, st, g)
    A11, A12 = int(prep.A[t1, t1]), int(prep.A[t1, t2])
    g1, g2 = g[t1], g[t2]
    c = A12 * _inv(2 * A11, p)
    phi = (g2 - c * g1) % p
    alpha1 = (q["a11"] + c * c * q["a22"] + (2 * A12 * q["a12"] - 1) * _inv(4 * A11, p)) % p
    alpha2 = ((A12 * _inv(A11, p) * q["a22"] + q["a12"]) * phi + q["F1"]
              + (A12 * q["F2"] + g1) * _inv(2 * A11, p)) % p
    alpha3 = (q["a22"] * phi * phi + q["F2"] * phi + q["F0"] - g1 * g1 * _inv(4 * A11, p)) % p
    return {**q, "phi": phi, "alpha1": alpha1, "alpha2": alpha2, "alpha3": alpha3, "A11": A11}


def quad_degenerate_pair_at(prep: Prepared, st: dict, b: int) -> tuple[int, int]:
    p = prep.p
    t = degenerate_pair_terms(prep, st, b)
    if t["alpha1"] == 0:
        raise NotApplicable(f"alpha_1 vanishes at b={b}")
    e = prep.gd(b) + t["alpha3"] - t["alpha2"] ** 2 * _inv(4 * t["alpha1"], p)
    return eta(p, -t["A11"] * t["alpha1"]), e % p


def quad_pair_setup(prep: Prepared, pair=None, statement_sign: bool = False) -> dict:
    _odd_only(prep)
    p = prep.p
    t1, t2 = _pick_pair(prep, pair, want_diag_first=False)
    A = prep.A
    delta = (int(A[t1, t2]) ** 2 - 4 * int(A[t1, t1]) * int(A[t2, t2])) % p
    if delta == 0:
        raise NotApplicable("A_{t1 t2}^2 - 4 A_{t1 t1} A_{t2 t2} must be nonzero")
    return {"t1": t1, "t2": t2, "delta": delta, "statement_sign": statement_sign, "cache": _Cache()}


def pair_terms(prep: Prepared, st: dict, b: int) -> dict:
    """B_1..B_3 and beta_1..beta_3 at b."""
    p = prep.p
    t1, t2, delta = st["t1"], st["t2"], st["delta"]
    g = prep.expansion.g_at(b)
    q = _two_var_parts(prep, st, g)
    A11, A12, A22 = int(prep.A[t1, t1]), int(prep.A[t1, t2]), int(prep.A[t2, t2])
    g1, g2 = g[t1], g[t2]
    di = _inv(delta, p)
    return {
        **q,
        "B1": (q["a11"] + A22 * di) % p,
        "B2": (q["a22"] + A11 * di) % p,
        "B3": (q["a12"] - A12 * di) % p,
        "beta1": (q["F1"] + (A12 * g2 - 2 * A22 * g1) * di) % p,
        "beta2": (q["F2"] + (A12 * g1 - 2 * A11 * g2) * di) % p,
        "beta3": (q["F0"] + (A22 * g1 * g1 + A11 * g2 * g2 - A12 * g1 * g2) * di) % p,
    }


def quad_pair_at(prep: Prepared, st: dict, b: int) -> tuple[int, int]:
    p = prep.p
    t = pair_terms(prep, st, b)
    B1, B2, B3 = t["B1"], t["B2"], t["B3"]
    be1, be2 = t["beta1"], t["beta2"]
    D2 = (B3 * B3 - 4 * B1 * B2) % p
    if D2 == 0:
        raise NotApplicable(f"B_3^2 - 4 B_1 B_2 vanishes at b={b}")
    num = B1 * be2 * be2 + B2 * be1 * be1 - B3 * be1 * be2
    e = prep.gd(b) + num * _inv(D2, p) + t["beta3"]
    # summing the two Gauss factors gives eta(B3^2 - 4B1B2); the alternative
    # eta(4B1B2 - B3^2) differs by eta(-1) and is kept only for comparison
    second = -D2 if st["statement_sign"] else D2
    return eta(p, st["delta"]) * eta(p, second), e % p


def diagonal_elimination_setup(prep: Prepared) -> dict:
    _odd_only(prep)
    p = prep.p
    A = prep.A
    tau = A.shape[0]
    if np.any(A[~np.eye(tau, dtype=bool)]):
        raise NotApplicable("off-diagonal expansion coefficients must vanish")
    zero_diag = [i + 1 for i in range(tau) if A[i, i] == 0]
    if zero_diag:
        raise NotApplicable(f"A_ii = 0 for i in {zero_diag}; the instance reduces to fewer points")
    a = np.zeros((tau, tau), dtype=np.int64)
    for e, c in prep.F.terms.items():
        used = [i for i, k in enumerate(e) if k]
        if sum(e) != 2:
            raise NotApplicable("F must be a homogeneous quadratic form")
        if len(used) == 1:
            a[used[0], used[0]] = c
        else:
            a[used[0], used[1]] = c
    if not np.any(a):
        raise NotApplicable("F must be nonzero")
    diag = [int(A[i, i]) for i in range(tau)]
    gam = [(int(a[i, i]) - _inv(4 * diag[i], p)) % p for i in range(tau)]
    gij = {(i, j): int(a[i, j]) for i in range(tau) for j in range(i + 1, tau)}
    # pivots do not depend on b; record the elimination multipliers once
    steps = []
    for k in range(tau):
        if gam[k] == 0:
            raise PivotDegenerate(f"pivot gamma_{k + 1} vanishes")
        row = {i: gij[(k, i)] for i in range(k + 1, tau)}
        steps.append((gam[k], row))
        for i in range(k + 1, tau):
            gam[i] = (gam[i] - row[i] * row[i] * _inv(4 * gam[k], p)) % p
            for j in range(i + 1, tau):
                gij[(i, j)] = (gij[(i, j)] - row[i] * row[j] * _inv(2 * gam[k], p)) % p
    sign = 1
    for i, (piv, _) in enumerate(steps):
        sign *= eta(p, -diag[i] * piv)
    return {"steps": steps, "diag": diag, "sign": sign, "pivots": [s[0] for s in steps]}


def diagonal_elimination_at(prep: Prepared, st: dict, b: int) -> tuple[int, int]:
    p = prep.p
    diag, steps = st["diag"], st["steps"]
    g = prep.expansion.g_at(b)
    tau = len(g)
    rho = [g[i] * _inv(2 * diag[i], p) % p for i in range(tau)]
    e = prep.gd(b)
    for k, (piv, row) in enumerate(steps):
        e -= g[k] * g[k] * _inv(4 * diag[k], p) + rho[k] * rho[k] * _inv(4 * piv, p)
        for i in range(k + 1, tau):
            rho[i] = (rho[i] - row[i] * rho[k] * _inv(2 * piv, p)) % p
    return st["sign"], e % p


def elimination_rho(prep: Prepared, b: int) -> list[int]:
    """The final-stage linear coefficients rho_i at b (for reporting)."""
    st = diagonal_elimination_setup(prep)
    p = prep.p
    g = prep.expansion.g_at(b)
    tau = len(g)
    rho = [g[i] * _inv(2 * st["diag"][i], p) % p for i in range(tau)]
    out = []
    for k, (piv, row) in enumerate(st["steps"]):
        out.append(rho[k])
        for i in range(k + 1, tau):
            rho[i] = (rho[i] - row[i] * rho[k] * _inv(2 * piv, p)) % p
    return out


RULES = {
    "disjoint-pairs": (disjoint_pairs_setup, disjoint_pairs_at),
    "star": (star_setup, star_at),
    "product-pair": (product_pair_setup, product_pair_at),
    "quad-none": (quad_none_setup, quad_none_at),
    "quad-single": (quad_single_setup, quad_single_at),
    "quad-degenerate-pair": (quad_degenerate_pair_setup, quad_degenerate_pair_at),
    "quad-pair": (quad_pair_setup, quad_pair_at),
    "diagonal-elimination": (diagonal_elimination_setup, diagonal_elimination_at),
}


@dataclass
class Prediction:
    rule: str
    bent: bool
    spectrum: WalshSpectrum | None
    details: dict = field(default_factory=dict)


def predict(rule: str, prep: Prepared, **opts) -> Prediction:
    """Assemble the predicted spectrum for every b, or raise NotApplicable."""
    if rule not in RULES:
        raise KeyError(f"unknown rule {rule!r}")
    setup, at = RULES[rule]
    st = setup(prep, **opts)
    details = {k: v for k, v in st.items() if k != "cache" and k != "steps"}
    if rule == "product-pair" and st["disc"] == 0:
        return Prediction(rule, False, None, details)
    ctx = prep.ctx
    signs = np.zeros(ctx.q, dtype=np.int64)
    exps = np.zeros(ctx.q, dtype=np.int64)
    for b in range(ctx.q):
        signs[b], exps[b] = at(prep, st, b)
    base = np.array(prep.report.unit_scale.coeffs, dtype=np.int64)
    rows = signs[:, None] * base[None, :]
    spec = WalshSpectrum(ctx, cyclo.roll(rows, exps % prep.p))
    return Prediction(rule, True, spec, details)


@dataclass
class Comparison:
    rule: str
    applicable: bool
    predicted_bent: bool | None
    oracle_bent: bool
    equal: bool
    first_mismatch: int | None = None
    reason: str | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "rule": self.rule,
            "applicable": self.applicable,
            "bent": self.oracle_bent,
            "predicted_bent": self.predicted_bent,
            "predicted_vs_oracle": "equal" if self.equal else (
                f"mismatch({self.first_mismatch})" if self.first_mismatch is not None else "mismatch"),
        }
        if self.reason:
            out["reason"] = self.reason
        return out


def compare_with_oracle(rule: str, g: PFunc, F: ReducedPoly, points, **opts) -> Comparison:
    """Run a predictor and the direct transform of the composed function."""
    diag_override = opts.pop("diag_override", None)
    f = compose(TraceComposition(g, F, tuple(int(u) for u in points)))
    oracle = walsh_full(f)
    oracle_bent = classify(f, oracle).is_bent
    try:
        prep = prepare(g, F, points, diag_override=diag_override)
        pred = predict(rule, prep, **opts)
    except NotApplicable as exc:
        return Comparison(rule, False, None, oracle_bent, False, reason=str(exc))
    if pred.spectrum is None:
        return Comparison(rule, True, False, oracle_bent, not oracle_bent, details=pred.details)
    diff = pred.spectrum.first_difference(oracle)
    return Comparison(rule, True, True, oracle_bent, diff is None, diff, details=pred.details)
