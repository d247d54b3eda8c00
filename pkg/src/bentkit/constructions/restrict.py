"""Partial evaluation and affine substitution for reduced polynomials."""

from __future__ import annotations

from ..func import ReducedPoly


class NotApplicable(ValueError):
    """Structural hypotheses of a predictor do not hold (not a disproof)."""


def restrict_poly(F: ReducedPoly, fixed: dict | None = None, subs: dict | None = None) -> ReducedPoly:
    """Substitute constants and affine images into F.

    ``fixed`` maps a variable index to an F_p value.  ``subs`` maps an index
    to ``(src, coef, const)`` meaning x_idx = coef * x_src + const, where src
    is a retained variable.  Indices are 0-based; the arity is preserved and
    replaced variables simply stop occurring.  Powers that reach p fold back
    through x^p = x.
    """
    fixed = dict(fixed or {})
    subs = dict(subs or {})
    p, tau = F.p, F.arity
    if set(fixed) & set(subs):
        raise ValueError("an index cannot be both fixed and substituted")
    for i in list(fixed) + list(subs):
        if not 0 <= i < tau:
            raise ValueError(f"index {i} outside arity {tau}")
    for i, (src, _, _) in subs.items():
        if src in fixed or src in subs:
            raise ValueError(f"substitution source x{src + 1} must be a retained variable")
    images = []
    for i in range(tau):
        if i in fixed:
            images.append(ReducedPoly.constant(p, tau, fixed[i]))
        elif i in subs:
            src, coef, const = subs[i]
            images.append(ReducedPoly.variable(p, tau, src) * int(coef) + ReducedPoly.constant(p, tau, const))
        else:
            images.append(ReducedPoly.variable(p, tau, i))
    out = ReducedPoly(p, tau, {})
    for e, c in F.terms.items():
        term = ReducedPoly.constant(p, tau, c)
        for i, k in enumerate(e):
            if k:
                term = term * (images[i] ** k)
        out = out + term
    return out


def affine_parts(R: ReducedPoly, variables) -> tuple[dict[int, int], int]:
    """Coefficients of an affine polynomial in ``variables`` plus the constant."""
    variables = set(variables)
    coeffs = {v: 0 for v in variables}
    const = 0
    for e, c in R.terms.items():
        used = [i for i, k in enumerate(e) if k]
        if not used:
            const = c
        elif len(used) == 1 and e[used[0]] == 1 and used[0] in variables:
            coeffs[used[0]] = c
        else:
            raise NotApplicable(f"restriction is not affine: {R}")
    return coeffs, const


def quadratic_parts(R: ReducedPoly, v1: int, v2: int | None = None) -> dict[str, int]:
    """Read a11, a22, a12, F1, F2, F0 from a polynomial of degree <= 2 in v1, v2."""
    out = {"a11": 0, "a22": 0, "a12": 0, "F1": 0, "F2": 0, "F0": 0}
    for e, c in R.terms.items():
        used = {i: k for i, k in enumerate(e) if k}
        if any(i not in (v1, v2) for i in used) or sum(used.values()) > 2:
            raise NotApplicable(f"restriction is not quadratic in the retained variables: {R}")
        if not used:
            out["F0"] = c
        elif used == {v1: 2}:
            out["a11"] = c
        elif used == {v1: 1}:
            out["F1"] = c
        elif v2 is not None and used == {v2: 2}:
            out["a22"] = c
        elif v2 is not None and used == {v2: 1}:
            out["F2"] = c
        else:
            out["a12"] = c
    return out
