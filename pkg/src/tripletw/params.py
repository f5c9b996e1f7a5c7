"""Module parameters on the rescaled lattices.

A weight mu in (1/sqrt p)P is stored as the integer vector x = sqrt(p) mu, so
all exposed quantities (norms, conformal weights, pairings against rho) are
exact rationals: |mu|^2 = |x|^2 / p and (mu, rho) enters every formula with a
compensating factor of sqrt(p).

The parameter set Lambda consists of classes lambda = -sqrt(p) lambda0 +
lambda_p, with lambda0 running over the minuscule-or-zero representatives of
P/Q and lambda_p having digit coordinates 0 <= s_i <= p - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._exact import IntVec, dot, mat_vec
from .rootsys import (
    RootSystem,
    WeylElement,
    circ_act,
    longest_element,
    norm_sq,
    pair_with_rho,
    weyl_matrix,
)


class NarrowViolation(ValueError):
    """Raised when an operation defined only under the narrow condition
    (sqrt(p) lambda_p + rho, theta) <= p is applied outside it."""


@dataclass(frozen=True)
class ModelParams:
    rs: RootSystem
    p: int
    c: Fraction       # central charge
    k: int            # level p - h
    k_dual: Fraction  # level 1/p - h

    def __hash__(self):
        return hash((self.rs.type, self.p))


@dataclass(frozen=True)
class ScaledWeight:
    """mu = x / sqrt(p) with x an integral weight."""
    x: IntVec
    p: int


@dataclass(frozen=True)
class LambdaParam:
    lambda0: IntVec   # fundamental coordinates of a member of Lambda0
    sp: IntVec        # digits of lambda_p, each in [0, p-1]
    p: int


def build_model(rs: RootSystem, p: int) -> ModelParams:
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"p must be an integer >= 2, got {p!r}")
    q0_sq = Fraction((p - 1) ** 2, p)
    c = rs.rank - 12 * q0_sq * norm_sq(rs, rs.rho)
    return ModelParams(rs=rs, p=p, c=c, k=p - rs.coxeter_h,
                       k_dual=Fraction(1, p) - rs.coxeter_h)


def central_charge(mp: ModelParams) -> Fraction:
    return mp.c


def central_charge_coxeter_form(mp: ModelParams) -> Fraction:
    """The same charge through the Coxeter data: l - Q0^2 h dim(g).

    Independent of the |rho|^2 route; the two agree exactly by the strange
    formula, which the verification suite checks.
    """
    rs = mp.rs
    q0_sq = Fraction((mp.p - 1) ** 2, mp.p)
    return rs.rank - q0_sq * rs.coxeter_h * rs.dim_g


def scaled(mp: ModelParams, x) -> ScaledWeight:
    xs = _int_vec(x, mp.rs.rank)
    return ScaledWeight(x=xs, p=mp.p)


def _int_vec(x, rank: int) -> IntVec:
    if len(x) != rank:
        raise ValueError("dimension mismatch")
    out = []
    for c in x:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integral coordinate {c}")
            c = c.numerator
        out.append(int(c))
    return tuple(out)


def _check_p(mp: ModelParams, other_p: int):
    if other_p != mp.p:
        raise ValueError(f"mixed p: model has p={mp.p}, value has p={other_p}")


def lambda0_set(rs: RootSystem) -> tuple[IntVec, ...]:
    """Representatives of P/Q: zero plus the minuscule fundamental weights.

    A_l: 0 and all omega_i; D_l: 0, omega_1, omega_{l-1}, omega_l;
    E6: 0, omega_1, omega_6; E7: 0, omega_7; E8: 0 only.
    """
    l = rs.rank
    fam = rs.type.family
    if fam == "A":
        idx = list(range(1, l + 1))
    elif fam == "D":
        idx = [1, l - 1, l]
    else:
        idx = {6: [1, 6], 7: [7], 8: []}[l]
    out = [(0,) * l]
    for i in idx:
        out.append(tuple(1 if j == i - 1 else 0 for j in range(l)))
    assert len(out) == rs.det
    for w in out[1:]:
        assert dot(w, rs.theta_root) == 1
    return tuple(out)


_CLASS_CACHE: dict = {}


def pq_class(rs: RootSystem, x) -> IntVec:
    """A label for the class of an integral weight in P/Q."""
    xs = _int_vec(x, rs.rank)
    raw = mat_vec(rs.adj, xs)
    return tuple(v % rs.det for v in raw)


def lambda0_rep(rs: RootSystem, x) -> IntVec:
    """The Lambda0 representative of the P/Q class of x."""
    table = _CLASS_CACHE.get(rs.type)
    if table is None:
        table = {pq_class(rs, w): w for w in lambda0_set(rs)}
        assert len(table) == rs.det
        _CLASS_CACHE[rs.type] = table
    return table[pq_class(rs, x)]


def decompose(mp: ModelParams, mu: ScaledWeight) -> tuple[IntVec, IntVec]:
    """Split mu = -sqrt(p) mu0 + mu_p; returns (mu0, digits of mu_p).

    The digit s_i is the representative of x_i mod p inside [0, p-1]; this
    makes the decomposition total and unique.
    """
    _check_p(mp, mu.p)
    p = mp.p
    sp = tuple(c % p for c in mu.x)
    mu0 = tuple((s - c) // p for s, c in zip(sp, mu.x))
    return mu0, sp


def star_act(mp: ModelParams, w: WeylElement, mu: ScaledWeight) -> ScaledWeight:
    """The twisted action: sigma * mu = -sqrt(p) mu0 + shifted action on mu_p."""
    _check_p(mp, mu.p)
    mu0, sp = decompose(mp, mu)
    moved = circ_act(w, sp)
    return ScaledWeight(x=tuple(-mp.p * a + b for a, b in zip(mu0, moved)), p=mp.p)


def epsilon(mp: ModelParams, sp, w: WeylElement) -> IntVec:
    """The integral weight (1/sqrt p)(sigma * lambda_p - (sigma * lambda_p)_p).

    Equals minus the mu0-part of the decomposition of sigma * lambda_p.
    """
    sp = _digits(mp, sp)
    moved = star_act(mp, w, ScaledWeight(x=sp, p=mp.p))
    mu0, _ = decompose(mp, moved)
    return tuple(-c for c in mu0)


def _digits(mp: ModelParams, sp) -> IntVec:
    sp = _int_vec(sp, mp.rs.rank)
    if any(not 0 <= s <= mp.p - 1 for s in sp):
        raise ValueError(f"digits {sp} out of range for p={mp.p}")
    return sp


def conformal_weight(mp: ModelParams, mu: ScaledWeight) -> Fraction:
    """Lowest grading of the Fock module of mu: |mu|^2/2 - (1 - 1/p)(x, rho)."""
    _check_p(mp, mu.p)
    p = mp.p
    return Fraction(norm_sq(mp.rs, mu.x), 2 * p) - Fraction(p - 1, p) * pair_with_rho(mp.rs, mu.x)


def narrow(mp: ModelParams, sp) -> bool:
    """(sqrt(p) lambda_p + rho, theta) <= p, as an exact integer comparison."""
    sp = _digits(mp, sp)
    return dot(tuple(s + 1 for s in sp), mp.rs.theta_root) <= mp.p


def narrow_margin(mp: ModelParams, sp) -> int:
    """(sqrt(p) lambda_p + rho, theta) - p; nonpositive iff narrow."""
    sp = _digits(mp, sp)
    return dot(tuple(s + 1 for s in sp), mp.rs.theta_root) - mp.p


def lemma216_cond1(mp: ModelParams, sp, word) -> bool:
    """Vanishing of the epsilon pairings along a reduced word of w0.

    The word (j_1, ..., j_N) is read right to left, so the partial products
    are its suffixes; the condition asks that for 1 <= n < N the epsilon of
    the length-n suffix pairs to zero with the next simple root alpha_{j_{N-n}}.
    """
    rs = mp.rs
    word = tuple(int(i) for i in word)
    n_pos = len(rs.positive_roots)
    w0 = longest_element(rs)
    if len(word) != n_pos or weyl_matrix(rs.cartan, word) != w0.matrix:
        raise ValueError("word is not a reduced word of the longest element")
    sp = _digits(mp, sp)
    for n in range(1, n_pos):
        suffix = word[n_pos - n:]
        partial = WeylElement(suffix, weyl_matrix(rs.cartan, suffix))
        eps = epsilon(mp, sp, partial)
        nxt = word[n_pos - n - 1]
        # (eps, alpha_j) is just the j-th fundamental coordinate of eps
        if eps[nxt - 1] != 0:
            return False
    return True


def lambda_params(mp: ModelParams) -> tuple[LambdaParam, ...]:
    """All of Lambda: every (lambda0, digit vector) pair, in a fixed order."""
    rs = mp.rs
    out = []
    for lam0 in lambda0_set(rs):
        out.extend(
            LambdaParam(lambda0=lam0, sp=sp, p=mp.p)
            for sp in _digit_grid(rs.rank, mp.p)
        )
    return tuple(out)


def _digit_grid(rank: int, p: int):
    if rank == 0:
        yield ()
        return
    for head in range(p):
        for tail in _digit_grid(rank - 1, p):
            yield (head,) + tail


def lambda_x(mp: ModelParams, lam: LambdaParam) -> ScaledWeight:
    """The integer vector sqrt(p) lambda = -p lambda0 + digits."""
    _check_p(mp, lam.p)
    return ScaledWeight(
        x=tuple(-mp.p * a + s for a, s in zip(lam.lambda0, lam.sp)), p=mp.p
    )


def canonical_lambda(mp: ModelParams, mu: ScaledWeight) -> LambdaParam:
    """The unique Lambda representative of mu modulo sqrt(p) Q."""
    _check_p(mp, mu.p)
    mu0, sp = decompose(mp, mu)
    lam0 = lambda0_rep(mp.rs, mu0)
    return LambdaParam(lambda0=lam0, sp=sp, p=mp.p)


def minus_w0(rs: RootSystem, x) -> IntVec:
    """The diagram involution x -> -w0(x) on fundamental coordinates."""
    w0 = longest_element(rs)
    return tuple(-c for c in mat_vec(w0.matrix, _int_vec(x, rs.rank)))


def dual_param(mp: ModelParams, lam: LambdaParam) -> LambdaParam:
    """lambda' = -w0(lambda): both lambda0 and the digits get permuted by
    the diagram involution."""
    _check_p(mp, lam.p)
    rs = mp.rs
    lam0 = minus_w0(rs, lam.lambda0)
    sp = minus_w0(rs, lam.sp)
    assert all(0 <= s <= mp.p - 1 for s in sp)
    return LambdaParam(lambda0=lam0, sp=sp, p=mp.p)


def dual_module_param(mp: ModelParams, lam: LambdaParam) -> LambdaParam:
    """Parameter of the contragredient module: the canonical representative
    of w0 * lambda' modulo sqrt(p) Q."""
    _check_p(mp, lam.p)
    lamd = dual_param(mp, lam)
    moved = star_act(mp, longest_element(mp.rs), lambda_x(mp, lamd))
    return canonical_lambda(mp, moved)


def delta_lambda(mp: ModelParams, lam: LambdaParam) -> Fraction:
    """Conformal weight of the parameter lambda itself."""
    return conformal_weight(mp, lambda_x(mp, lam))
