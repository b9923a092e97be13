"""Graded normal-ordered operator algebra on superspace.

Operators are polynomials in the generators

    x^mu, d/dx^mu (mu = 0..3),
    th^a, d/dth^a, tb^adot, d/dtb^adot (a, adot = 1..2),

with exact GaussianRational coefficients.  th/tb are Grassmann odd.  The
only nontrivial rewriting rules are

    [d_mu, x^nu] = delta,  {d/dth^a, th^b} = delta,  {d/dtb^ad, tb^bd} = delta;

all other generator pairs commute or anticommute by parity.  A monomial is
kept in normal order: coordinates left of derivatives, odd generators
sorted by family and index with sign bookkeeping, no odd generator
repeated.  Composition re-normal-orders via these rules, so the operator
algebra is associative by construction and associativity doubles as a
self-check of the rewriting engine.

Momentum is realized as P_mu = momentum_sign * i * d_mu with
momentum_sign = -1 by default; the sign is a flag because the bracket
relations under verification pull in opposite directions (the Lorentz
brackets close for +i d_mu while the supercharge bracket has coefficient
+2 for -i d_mu), and the verification report records both outcomes.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalar import GaussianRational, I, ONE, ZERO
from .spinor import EPS_RAISE, MINKOWSKI, SigmaConvention, sigma_lower_raised, sigma_upper

# Generator classes in canonical order: coordinates first, then derivatives.
X, TH, TB, DX, DTH, DTB = range(6)
_ODD = (TH, TB, DTH, DTB)
_CONTRACTIONS = {(DX, X), (DTH, TH), (DTB, TB)}

Key = tuple  # (xexp 4-tuple, th mask, tb mask, dxexp 4-tuple, dth mask, dtb mask)

IDENTITY_KEY: Key = ((0, 0, 0, 0), 0, 0, (0, 0, 0, 0), 0, 0)


def _key_to_seq(key: Key) -> tuple:
    xexp, th, tb, dxexp, dth, dtb = key
    seq = []
    for mu in range(4):
        seq.extend(((X, mu),) * xexp[mu])
    for a in range(2):
        if th >> a & 1:
            seq.append((TH, a))
    for a in range(2):
        if tb >> a & 1:
            seq.append((TB, a))
    for mu in range(4):
        seq.extend(((DX, mu),) * dxexp[mu])
    for a in range(2):
        if dth >> a & 1:
            seq.append((DTH, a))
    for a in range(2):
        if dtb >> a & 1:
            seq.append((DTB, a))
    return tuple(seq)


def _seq_to_key(seq) -> Key:
    xexp = [0, 0, 0, 0]
    dxexp = [0, 0, 0, 0]
    masks = {TH: 0, TB: 0, DTH: 0, DTB: 0}
    for cls, idx in seq:
        if cls == X:
            xexp[idx] += 1
        elif cls == DX:
            dxexp[idx] += 1
        else:
            masks[cls] |= 1 << idx
    return (tuple(xexp), masks[TH], masks[TB], tuple(dxexp), masks[DTH], masks[DTB])


@functools.lru_cache(maxsize=200000)
def _normal_order(seq: tuple) -> tuple:
    """Normal-order a raw generator sequence; returns ((key, int coeff), ...)."""
    out: dict[Key, int] = {}
    work = [(1, list(seq))]
    while work:
        coeff, s = work.pop()
        pos = 0
        rewritten = False
        while pos < len(s) - 1:
            g1, g2 = s[pos], s[pos + 1]
            if g1 == g2 and g1[0] in _ODD:
                rewritten = True  # nilpotent: term vanishes
                coeff = 0
                break
            if g1 > g2:
                both_odd = g1[0] in _ODD and g2[0] in _ODD
                swapped = s[:pos] + [g2, g1] + s[pos + 2:]
                if (g1[0], g2[0]) in _CONTRACTIONS and g1[1] == g2[1]:
                    contracted = s[:pos] + s[pos + 2:]
                    sign = -1 if both_odd else 1
                    work.append((coeff * sign, swapped))
                    work.append((coeff, contracted))
                else:
                    sign = -1 if both_odd else 1
                    work.append((coeff * sign, swapped))
                rewritten = True
                break
            pos += 1
        if rewritten:
            continue
        if coeff:
            key = _seq_to_key(s)
            out[key] = out.get(key, 0) + coeff
    return tuple((k, c) for k, c in out.items() if c)


def _key_parity(key: Key) -> int:
    _, th, tb, _, dth, dtb = key
    return (th.bit_count() + tb.bit_count() + dth.bit_count() + dtb.bit_count()) & 1


def _key_has_derivatives(key: Key) -> bool:
    return any(key[3]) or key[4] or key[5]


_CLASS_NAMES = {X: "x", DX: "dx", TH: "th", DTH: "dth", TB: "tb", DTB: "dtb"}


def _key_str(key: Key) -> str:
    seq = _key_to_seq(key)
    if not seq:
        return "1"
    parts = []
    pos = 0
    while pos < len(seq):
        cls, idx = seq[pos]
        run = 1
        while pos + run < len(seq) and seq[pos + run] == (cls, idx):
            run += 1
        label = f"{_CLASS_NAMES[cls]}{idx if cls in (X, DX) else idx + 1}"
        parts.append(label if run == 1 else f"{label}^{run}")
        pos += run
    return " ".join(parts)


class SuperOp:
    """An exact normal-ordered superspace operator."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Key, GaussianRational] | None = None):
        clean = {}
        for k, v in (terms or {}).items():
            v = GaussianRational.of(v)
            if not v.is_zero():
                clean[k] = v
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "SuperOp":
        return cls()

    @classmethod
    def one(cls) -> "SuperOp":
        return cls({IDENTITY_KEY: ONE})

    @classmethod
    def _single(cls, cls_id, idx) -> "SuperOp":
        return cls({_seq_to_key([(cls_id, idx)]): ONE})

    @classmethod
    def x(cls, mu: int) -> "SuperOp":
        return cls._single(X, mu)

    @classmethod
    def dx(cls, mu: int) -> "SuperOp":
        return cls._single(DX, mu)

    @classmethod
    def theta(cls, a: int) -> "SuperOp":
        """th^a for a in 1..2."""
        return cls._single(TH, a - 1)

    @classmethod
    def theta_bar(cls, adot: int) -> "SuperOp":
        return cls._single(TB, adot - 1)

    @classmethod
    def dtheta(cls, a: int) -> "SuperOp":
        return cls._single(DTH, a - 1)

    @classmethod
    def dtheta_bar(cls, adot: int) -> "SuperOp":
        return cls._single(DTB, adot - 1)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SuperOp):
            return NotImplemented
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, ZERO) + v
        return SuperOp(terms)

    def __sub__(self, other):
        if not isinstance(other, SuperOp):
            return NotImplemented
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, ZERO) - v
        return SuperOp(terms)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, s) -> "SuperOp":
        s = GaussianRational.of(s)
        return SuperOp({k: s * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SuperOp):
            return compose(self, other)
        return self.scaled(other)

    def __rmul__(self, s):
        return self.scaled(s)

    def __eq__(self, other):
        if not isinstance(other, SuperOp):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        return sorted(self._terms.items())

    def coefficient(self, key: Key) -> GaussianRational:
        return self._terms.get(key, ZERO)

    def monomial_count(self) -> int:
        return len(self._terms)

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for mixed or zero."""
        if not self._terms:
            return None
        parities = {_key_parity(k) for k in self._terms}
        return parities.pop() if len(parities) == 1 else None

    # -- actions -----------------------------------------------------------

    def apply_to(self, state: "SuperOp") -> "SuperOp":
        """Act on a superspace function (an operator with no derivatives)."""
        if any(_key_has_derivatives(k) for k in state._terms):
            raise ValueError("state must be free of derivative factors")
        product = compose(self, state)
        return SuperOp(
            {k: v for k, v in product._terms.items() if not _key_has_derivatives(k)}
        )

    def substitute_momentum(self, p) -> "SuperOp":
        """Plane-wave backend: replace each d_mu by i*p_mu (x-free operators only)."""
        p = tuple(GaussianRational.of(v) for v in p)
        if len(p) != 4:
            raise ValueError("need four momentum components")
        terms: dict[Key, GaussianRational] = {}
        for key, coeff in self._terms.items():
            xexp, th, tb, dxexp, dth, dtb = key
            if any(xexp):
                raise ValueError("substitution is only valid for x-free operators")
            factor = ONE
            for mu in range(4):
                for _ in range(dxexp[mu]):
                    factor = factor * (I * p[mu])
            new_key = (xexp, th, tb, (0, 0, 0, 0), dth, dtb)
            terms[new_key] = terms.get(new_key, ZERO) + coeff * factor
        return SuperOp(terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for key, coeff in self.terms():
            mono = _key_str(key)
            if coeff == ONE and mono != "1":
                parts.append(mono)
            elif coeff == -ONE and mono != "1":
                parts.append(f"-{mono}")
            else:
                c = str(coeff)
                if coeff.re != 0 and coeff.im != 0:
                    c = f"({c})"
                parts.append(c if mono == "1" else f"{c} {mono}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    __repr__ = __str__


def compose(A: SuperOp, B: SuperOp) -> SuperOp:
    """Operator product, re-normal-ordered."""
    terms: dict[Key, GaussianRational] = {}
    for k1, c1 in A._terms.items():
        seq1 = _key_to_seq(k1)
        for k2, c2 in B._terms.items():
            c = c1 * c2
            for key, ic in _normal_order(seq1 + _key_to_seq(k2)):
                terms[key] = terms.get(key, ZERO) + c * ic
    return SuperOp(terms)


def op_commutator(A: SuperOp, B: SuperOp) -> SuperOp:
    return compose(A, B) - compose(B, A)


def op_anticommutator(A: SuperOp, B: SuperOp) -> SuperOp:
    return compose(A, B) + compose(B, A)


def graded_bracket(A: SuperOp, B: SuperOp) -> SuperOp:
    """AB - (-1)^{|A||B|} BA for homogeneous operands."""
    pa, pb = A.parity(), B.parity()
    if A.is_zero() or B.is_zero():
        return SuperOp.zero()
    if pa is None or pb is None:
        raise ValueError("graded bracket needs operands of definite parity")
    if pa and pb:
        return op_anticommutator(A, B)
    return op_commutator(A, B)


# --------------------------------------------------------------------------
# Generators
# --------------------------------------------------------------------------

DEFAULT_MOMENTUM_SIGN = -1


@dataclass(frozen=True)
class GeneratorSet:
    """Translation, Lorentz, and supersymmetry generators in one convention."""

    convention: SigmaConvention
    momentum_sign: int
    P_lower: tuple[SuperOp, ...]       # P_mu
    M_upper: tuple[tuple[SuperOp, ...], ...]  # M^{mu nu}
    Q: tuple[SuperOp, ...]             # Q_a
    Q_bar_lower: tuple[SuperOp, ...]   # Qbar_adot

    def P_upper(self, mu: int) -> SuperOp:
        return self.P_lower[mu].scaled(MINKOWSKI[mu])

    def Q_bar_upper(self, adot: int) -> SuperOp:
        # Qbar^adot = eps^{adot bdot} Qbar_bdot
        out = SuperOp.zero()
        for bd in range(2):
            c = EPS_RAISE[adot][bd]
            if not c.is_zero():
                out = out + self.Q_bar_lower[bd].scaled(c)
        return out


def build_generators(convention: SigmaConvention = SigmaConvention.STANDARD,
                     momentum_sign: int = DEFAULT_MOMENTUM_SIGN) -> GeneratorSet:
    """Build P, M, Q, Qbar as superspace differential operators.

    P_mu = momentum_sign * i * d_mu.  M^{mu nu} = x^mu P^nu - x^nu P^mu.
    Q_a = -i d/dth^a - sigma^mu_{a bdot} tb^bdot d_mu and
    Qbar_adot = i d/dtb^adot + th^b sigma^mu_{b adot} d_mu, with sigma in
    the requested normalization.
    """
    if momentum_sign not in (1, -1):
        raise ValueError("momentum_sign must be +1 or -1")
    sgn = GaussianRational.of(momentum_sign)
    P_lower = tuple(SuperOp.dx(mu).scaled(sgn * I) for mu in range(4))

    def P_up(mu):
        return P_lower[mu].scaled(MINKOWSKI[mu])

    M = []
    for mu in range(4):
        row = []
        for nu in range(4):
            row.append(compose(SuperOp.x(mu), P_up(nu)) - compose(SuperOp.x(nu), P_up(mu)))
        M.append(tuple(row))

    sigma = sigma_upper(convention)
    Q = []
    for a in range(2):
        op = SuperOp.dtheta(a + 1).scaled(-I)
        for mu in range(4):
            for bd in range(2):
                c = sigma[mu][a][bd]
                if not c.is_zero():
                    op = op - compose(SuperOp.theta_bar(bd + 1), SuperOp.dx(mu)).scaled(c)
        Q.append(op)

    Q_bar = []
    for ad in range(2):
        op = SuperOp.dtheta_bar(ad + 1).scaled(I)
        for mu in range(4):
            for b in range(2):
                c = sigma[mu][b][ad]
                if not c.is_zero():
                    op = op + compose(SuperOp.theta(b + 1), SuperOp.dx(mu)).scaled(c)
        Q_bar.append(op)

    return GeneratorSet(convention, momentum_sign, P_lower, tuple(M), tuple(Q), tuple(Q_bar))


# --------------------------------------------------------------------------
# Verifications
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PoincareReport:
    momentum_sign: int
    translations_commute: bool                 # [P^mu, P^nu] = 0
    boost_translation_holds: bool              # [M^{mu nu}, P^lam] = i(eta^{nu lam} P^mu - eta^{mu lam} P^nu)
    lorentz_closure_holds: bool                # [M, M] relation, all index combinations
    failures: tuple[str, ...]

    @property
    def all_hold(self) -> bool:
        return (self.translations_commute and self.boost_translation_holds
                and self.lorentz_closure_holds)


def verify_poincare(gens: GeneratorSet) -> PoincareReport:
    eta = MINKOWSKI
    failures = []

    pp_ok = True
    for mu, nu in itertools.product(range(4), repeat=2):
        if not op_commutator(gens.P_upper(mu), gens.P_upper(nu)).is_zero():
            pp_ok = False
            failures.append(f"[P^{mu},P^{nu}] != 0")

    mp_ok = True
    for mu, nu, lam in itertools.product(range(4), repeat=3):
        lhs = op_commutator(gens.M_upper[mu][nu], gens.P_upper(lam))
        rhs = SuperOp.zero()
        if nu == lam:
            rhs = rhs + gens.P_upper(mu).scaled(I * eta[nu])
        if mu == lam:
            rhs = rhs - gens.P_upper(nu).scaled(I * eta[mu])
        if lhs != rhs:
            mp_ok = False
            failures.append(f"[M^{{{mu}{nu}}},P^{lam}]")

    mm_ok = True
    for mu, nu, rho, sig in itertools.product(range(4), repeat=4):
        lhs = op_commutator(gens.M_upper[mu][nu], gens.M_upper[rho][sig])
        rhs = SuperOp.zero()
        if nu == rho:
            rhs = rhs + gens.M_upper[mu][sig].scaled(I * eta[nu])
        if mu == sig:
            rhs = rhs + gens.M_upper[nu][rho].scaled(I * eta[mu])
        if mu == rho:
            rhs = rhs - gens.M_upper[nu][sig].scaled(I * eta[mu])
        if nu == sig:
            rhs = rhs - gens.M_upper[mu][rho].scaled(I * eta[nu])
        if lhs != rhs:
            mm_ok = False
            failures.append(f"[M^{{{mu}{nu}}},M^{{{rho}{sig}}}]")

    return PoincareReport(gens.momentum_sign, pp_ok, mp_ok, mm_ok, tuple(failures))


@dataclass(frozen=True)
class SusyReport:
    convention: SigmaConvention
    momentum_sign: int
    qq_vanish: bool                      # {Q_a, Q_b} = 0, all pairs
    qbar_qbar_vanish: bool               # {Qbar, Qbar} = 0, all pairs
    c1: GaussianRational | None          # {Q_a, Qbar_bd} = c1 sigma^mu_{a bd} P_mu
    c2: GaussianRational | None          # sigma_mu^{a ad} {Q_a, Qbar_ad} = c2 P_mu
    inversion_quarter_holds: bool        # P_mu = (1/4) sigma_mu^{a ad} {Q_a, Qbar_ad}
    spatial_inversion_quarter_holds: bool
    p_q_brackets_vanish: bool            # [P^mu, Q_a] = 0 and [P^mu, Qbar^ad] = 0
    m_q_samples: tuple[tuple[str, str], ...]  # rendered [M, Q] / [M, Qbar] brackets


def _measure_scale(lhs: SuperOp, rhs: SuperOp) -> GaussianRational | None:
    """The scalar c with lhs = c*rhs, if one exists (rhs may be zero only with lhs)."""
    if rhs.is_zero():
        return ZERO if lhs.is_zero() else None
    key, coeff = rhs.terms()[0]
    c = lhs.coefficient(key) / coeff
    return c if (lhs - rhs.scaled(c)).is_zero() else None


def verify_susy(gens: GeneratorSet) -> SusyReport:
    sigma = sigma_upper(gens.convention)
    sigma_raised = sigma_lower_raised(gens.convention)

    qq = all(
        op_anticommutator(gens.Q[a], gens.Q[b]).is_zero()
        for a in range(2) for b in range(2)
    )
    qbqb = all(
        op_anticommutator(gens.Q_bar_lower[a], gens.Q_bar_lower[b]).is_zero()
        for a in range(2) for b in range(2)
    )

    # c1 from {Q_a, Qbar_bd} = c1 * sigma^mu_{a bd} P_mu, uniform over (a, bd).
    c1 = None
    for a, bd in itertools.product(range(2), repeat=2):
        lhs = op_anticommutator(gens.Q[a], gens.Q_bar_lower[bd])
        rhs = SuperOp.zero()
        for mu in range(4):
            coeff = sigma[mu][a][bd]
            if not coeff.is_zero():
                rhs = rhs + gens.P_lower[mu].scaled(coeff)
        this = _measure_scale(lhs, rhs)
        if this is None or (c1 is not None and this != c1):
            c1 = None
            break
        c1 = this

    # c2 from sigma_mu^{a ad} {Q_a, Qbar_ad} = c2 * P_mu, uniform over mu.
    c2 = None
    for mu in range(4):
        lhs = SuperOp.zero()
        for a, ad in itertools.product(range(2), repeat=2):
            coeff = sigma_raised[mu][a][ad]
            if not coeff.is_zero():
                lhs = lhs + op_anticommutator(gens.Q[a], gens.Q_bar_lower[ad]).scaled(coeff)
        this = _measure_scale(lhs, gens.P_lower[mu])
        if this is None or (c2 is not None and this != c2):
            c2 = None
            break
        c2 = this

    quarter = GaussianRational(Fraction(1, 4))
    inversion = c2 is not None and (quarter * c2) == ONE

    spatial_ok = True
    for mu in (1, 2, 3):
        lhs = SuperOp.zero()
        for a, ad in itertools.product(range(2), repeat=2):
            coeff = sigma_raised[mu][a][ad]
            if not coeff.is_zero():
                lhs = lhs + op_anticommutator(gens.Q[a], gens.Q_bar_lower[ad]).scaled(coeff)
        if lhs.scaled(quarter) != gens.P_lower[mu]:
            spatial_ok = False

    pq = all(
        op_commutator(gens.P_upper(mu), gens.Q[a]).is_zero()
        and op_commutator(gens.P_upper(mu), gens.Q_bar_upper(a)).is_zero()
        for mu in range(4) for a in range(2)
    )

    samples = []
    for (mu, nu) in ((0, 1), (1, 2)):
        samples.append(
            (f"[M^{{{mu}{nu}}}, Q_1]", str(op_commutator(gens.M_upper[mu][nu], gens.Q[0])))
        )
        samples.append(
            (f"[M^{{{mu}{nu}}}, Qbar_1]",
             str(op_commutator(gens.M_upper[mu][nu], gens.Q_bar_lower[0])))
        )

    return SusyReport(
        convention=gens.convention,
        momentum_sign=gens.momentum_sign,
        qq_vanish=qq,
        qbar_qbar_vanish=qbqb,
        c1=c1,
        c2=c2,
        inversion_quarter_holds=inversion,
        spatial_inversion_quarter_holds=spatial_ok,
        p_q_brackets_vanish=pq,
        m_q_samples=tuple(samples),
    )


def grassmann_relations_hold() -> bool:
    """{th, th} = {tb, tb} = {th, tb} = 0 for every index pair."""
    gens = [SuperOp.theta(1), SuperOp.theta(2), SuperOp.theta_bar(1), SuperOp.theta_bar(2)]
    return all(
        op_anticommutator(a, b).is_zero()
        for a, b in itertools.product(gens, repeat=2)
    )
