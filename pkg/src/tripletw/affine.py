"""Affine Weyl group machinery over a fixed model.

Elements are pairs (sigma, beta) in W x Q acting as sigma t_beta; weights at
level k live on the classical slice plus level and delta bookkeeping.  The
chamber test, the constructed chamber representative (omega, sigma, beta)
attached to a class parameter, the alcove elements y, and the resulting
orbit exponents feeding the character sums all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._exact import IntVec, dot, mat_vec
from .params import (
    LambdaParam,
    ModelParams,
    NarrowViolation,
    _check_p,
    _digits,
    lambda0_rep,
    narrow,
    narrow_margin,
)
from .rootsys import (
    RootSystem,
    WeylElement,
    act,
    norm_sq,
    root_action,
    root_coords_int,
    root_to_fund,
    weyl_compose,
    weyl_enumerate,
    weyl_inverse,
)


@dataclass(frozen=True)
class AffineWeight:
    classical: tuple   # fundamental coordinates of the classical part
    level: Fraction | int
    delta_coeff: Fraction | int


@dataclass(frozen=True)
class AffineWeylElement:
    sigma: WeylElement
    beta: IntVec       # translation part, simple-root coordinates


def aff_mul(rs: RootSystem, y1: AffineWeylElement, y2: AffineWeylElement,
            cap: int | None = None) -> AffineWeylElement:
    """(sigma1 t_b1)(sigma2 t_b2) = (sigma1 sigma2) t_{sigma2^{-1} b1 + b2}."""
    sigma = weyl_compose(rs, y1.sigma, y2.sigma, cap)
    inv2 = root_action(rs, weyl_inverse(rs, y2.sigma, cap))
    beta = tuple(a + b for a, b in zip(mat_vec(inv2, y1.beta), y2.beta))
    return AffineWeylElement(sigma=sigma, beta=beta)


def aff_act(rs: RootSystem, y: AffineWeylElement, mu: AffineWeight) -> AffineWeight:
    """Classical part sigma(mu_bar + level * beta); level preserved; the
    delta coefficient picks up -(mu_bar, beta) - |beta|^2 level / 2."""
    if len(mu.classical) != rs.rank:
        raise ValueError("dimension mismatch")
    beta_f = root_to_fund(rs, y.beta)
    shifted = tuple(c + mu.level * b for c, b in zip(mu.classical, beta_f))
    beta_sq = dot(beta_f, y.beta)
    delta = mu.delta_coeff - dot(mu.classical, y.beta) - Fraction(beta_sq, 2) * mu.level
    return AffineWeight(classical=act(y.sigma, shifted), level=mu.level,
                        delta_coeff=delta)


def aff_circ(mp: ModelParams, y: AffineWeylElement, mu: AffineWeight) -> AffineWeight:
    """The shifted action, conjugated by rho + h Lambda0."""
    rs = mp.rs
    h = rs.coxeter_h
    shifted = AffineWeight(
        classical=tuple(c + 1 for c in mu.classical),
        level=mu.level + h,
        delta_coeff=mu.delta_coeff,
    )
    out = aff_act(rs, y, shifted)
    return AffineWeight(
        classical=tuple(c - 1 for c in out.classical),
        level=out.level - h,
        delta_coeff=out.delta_coeff,
    )


def lemma39_test(mp: ModelParams, sigma: WeylElement, beta, alpha,
                 lam: LambdaParam) -> bool:
    """Finite chamber criterion for the translated parameter.

    True iff 0 <= (sigma^{-1}(g), p(beta - (alpha + lambda0 + rho)) + s + rho) <= p
    for every positive root g; evaluated as (g, sigma(...)) by invariance,
    so every comparison is between plain integers.
    """
    rs = mp.rs
    _check_p(mp, lam.p)
    p = mp.p
    beta_f = root_to_fund(rs, _int_tuple(beta, rs.rank))
    inner = tuple(
        p * (b - (a + l0 + 1)) + s + 1
        for b, a, l0, s in zip(beta_f, alpha, lam.lambda0, lam.sp, strict=True)
    )
    moved = act(sigma, inner)
    for g in rs.positive_roots:
        v = dot(g, moved)
        if v < 0 or v > p:
            return False
    return True


def _int_tuple(x, rank: int) -> IntVec:
    if len(x) != rank:
        raise ValueError("dimension mismatch")
    return tuple(int(c) for c in x)


_CHAMBER_CACHE: dict = {}


def lemma310_construct(mp: ModelParams, alpha, lambda0) -> tuple[IntVec, WeylElement, IntVec]:
    """The chamber data (omega, sigma, beta) attached to (alpha, lambda0).

    omega is the minuscule-or-zero representative of the class of
    lambda0 + rho; beta = alpha + lambda0 + rho - omega lies in Q; sigma is
    the unique Weyl element sending exactly the positive roots pairing to 0
    with omega to positive roots.  sigma and omega do not depend on alpha.
    Uniqueness is established by exhaustive search; beta is returned in
    simple-root coordinates.
    """
    rs = mp.rs
    alpha = _int_tuple(alpha, rs.rank)
    lambda0 = _int_tuple(lambda0, rs.rank)
    key = (rs.type, lambda0)
    got = _CHAMBER_CACHE.get(key)
    if got is None:
        shifted = tuple(c + 1 for c in lambda0)
        omega = lambda0_rep(rs, shifted)
        matches = []
        for w in weyl_enumerate(rs):
            rw = root_action(rs, w)
            ok = True
            for g in rs.positive_roots:
                pair = dot(g, omega)
                assert pair in (0, 1)
                positive = all(c >= 0 for c in mat_vec(rw, g))
                if positive != (pair == 0):
                    ok = False
                    break
            if ok:
                matches.append(w)
        if len(matches) != 1:
            raise RuntimeError(
                f"chamber element for lambda0={lambda0} not unique: {len(matches)} found"
            )
        got = (omega, matches[0])
        _CHAMBER_CACHE[key] = got
    omega, sigma = got
    beta_f = tuple(a + l0 + 1 - o for a, l0, o in zip(alpha, lambda0, omega))
    beta = root_coords_int(rs, beta_f)
    return omega, sigma, beta


def y_alpha(mp: ModelParams, alpha, lambda0) -> AffineWeylElement:
    """t_{omega - (alpha + lambda0 + rho)} sigma^{-1} in (sigma, beta) form."""
    return y_sigma(mp, _identity(mp.rs), alpha, lambda0)


def _identity(rs: RootSystem) -> WeylElement:
    return weyl_enumerate(rs)[0]


def y_sigma(mp: ModelParams, sigma: WeylElement, alpha, lambda0) -> AffineWeylElement:
    """t_{sigma(omega) - (alpha + lambda0 + rho)} sigma sigma_c^{-1}, where
    sigma_c is the chamber element of lambda0; returned in normal form
    (w, beta) with w t_beta = t_gamma w, beta = w^{-1}(gamma) in Q."""
    rs = mp.rs
    alpha = _int_tuple(alpha, rs.rank)
    lambda0 = _int_tuple(lambda0, rs.rank)
    omega, sigma_c, _ = lemma310_construct(mp, alpha, lambda0)
    gamma = tuple(
        so - (a + l0 + 1)
        for so, a, l0 in zip(act(sigma, omega), alpha, lambda0, strict=True)
    )
    w = weyl_compose(rs, sigma, weyl_inverse(rs, sigma_c))
    beta_f = act(weyl_inverse(rs, w), gamma)
    beta = root_coords_int(rs, beta_f)
    return AffineWeylElement(sigma=w, beta=beta)


_MU_CACHE: dict = {}


def mu_lambda(mp: ModelParams, lam: LambdaParam) -> AffineWeight:
    """The chamber weight of lambda at level k = p - h:
    sigma_c(-p omega + s + rho) - rho, with sigma_c, omega from lambda0."""
    rs = mp.rs
    _check_p(mp, lam.p)
    key = (rs.type, mp.p, lam.lambda0, lam.sp)
    got = _MU_CACHE.get(key)
    if got is not None:
        return got
    _digits(mp, lam.sp)
    zero = (0,) * rs.rank
    omega, sigma_c, _ = lemma310_construct(mp, zero, lam.lambda0)
    inner = tuple(-mp.p * o + s + 1 for o, s in zip(omega, lam.sp))
    classical = tuple(c - 1 for c in act(sigma_c, inner))
    got = AffineWeight(classical=classical, level=mp.k, delta_coeff=Fraction(0))
    _MU_CACHE[key] = got
    return got


def affine_exponent(mp: ModelParams, sigma: WeylElement, alpha,
                    lam: LambdaParam) -> Fraction:
    """Orbit exponent (1/2p)|classical part of y circ mu_lambda, plus rho|^2,
    where the orbit element attached to the label sigma is y_{sigma^{-1}}.

    Defined only under the narrow condition.  Labelling by the inverse makes
    the exponent agree with the direct character exponent of the same sigma
    term by term; the signed sums agree either way since inversion preserves
    length.
    """
    rs = mp.rs
    if not narrow(mp, lam.sp):
        raise NarrowViolation(
            f"(sqrt(p) lambda_p + rho, theta) = {narrow_margin(mp, lam.sp) + mp.p} "
            f"> p = {mp.p}"
        )
    y = y_sigma(mp, weyl_inverse(rs, sigma), alpha, lam.lambda0)
    out = aff_circ(mp, y, mu_lambda(mp, lam))
    shifted = tuple(c + 1 for c in out.classical)
    return Fraction(norm_sq(rs, shifted), 2 * mp.p)


def direct_exponent(mp: ModelParams, sigma: WeylElement, alpha,
                    lam: LambdaParam) -> Fraction:
    """Character exponent of one Weyl term, straight from the trace formula:
    (1/2)|sqrt(p) sigma(alpha + lambda0 + rho) - lambda_p - rho/sqrt(p)|^2,
    evaluated as |p sigma(v) - u|^2 / 2p with v = alpha + lambda0 + rho and
    u = s + rho."""
    rs = mp.rs
    _check_p(mp, lam.p)
    alpha = _int_tuple(alpha, rs.rank)
    v = tuple(a + l0 + 1 for a, l0 in zip(alpha, lam.lambda0))
    u = tuple(s + 1 for s in lam.sp)
    moved = tuple(mp.p * c - b for c, b in zip(act(sigma, v), u))
    return Fraction(norm_sq(rs, moved), 2 * mp.p)
