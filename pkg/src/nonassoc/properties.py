"""Identity checking for structure-constant algebras.

Multilinear laws (associativity, alternativity after linearization,
flexibility, Lie admissibility, the derivation property) are decided
exhaustively on basis tuples, which suffices by multilinearity over a
characteristic-zero field.  Power associativity and the Jordan law are not
multilinear; they are checked on all basis elements plus a deterministic
batch of pseudorandom elements with small integer coefficients.

Every check is exact: a law either holds or a nonzero defect element is
produced as a witness.  Witnesses are deterministic (lexicographically
first failing tuple).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra import AlgebraDef, Element, associator, commutator, jacobiator, multiply
from .scalar import ZERO, solve_exact

DEFAULT_SAMPLES = 100
DEFAULT_SEED = 20240811

PROPERTIES = (
    "associative",
    "alternative",
    "flexible",
    "lie_admissible",
    "power_associative",
    "jordan",
    "unital",
    "derivation_property",
)


@dataclass(frozen=True)
class Witness:
    """A concrete violation: which inputs failed and by how much."""

    defect: Element
    indices: tuple[int, ...] | None = None
    elements: tuple[Element, ...] | None = None
    law: str = ""

    def describe(self) -> str:
        alg = self.defect.algebra
        if self.indices is not None:
            args = ", ".join(alg.basis_names[i] for i in self.indices)
        elif self.elements is not None:
            args = ", ".join(str(e) for e in self.elements)
        else:
            args = "?"
        law = f" [{self.law}]" if self.law else ""
        return f"({args}) -> defect {self.defect}{law}"


@dataclass(frozen=True)
class PropertyReport:
    algebra: AlgebraDef
    property: str
    holds: bool
    witness: Witness | None = None
    detail: str = ""

    def __post_init__(self):
        if not self.holds:
            assert self.witness is not None and not self.witness.defect.is_zero()


def _first_basis_failure(alg, laws):
    """Scan basis triples in lex order; laws is [(tag, defect_fn(x, y, z))]."""
    basis = alg.basis()
    for i, j, k in itertools.product(range(alg.dim), repeat=3):
        for tag, fn in laws:
            d = fn(basis[i], basis[j], basis[k])
            if not d.is_zero():
                return Witness(defect=d, indices=(i, j, k), law=tag)
    return None


def _check_associative(alg, **_):
    w = _first_basis_failure(alg, [("associativity", associator)])
    return PropertyReport(alg, "associative", w is None, w)


def _check_flexible(alg, **_):
    def defect(x, y, z):
        return associator(x, y, z) + associator(z, y, x)

    w = _first_basis_failure(alg, [("flexible law", defect)])
    return PropertyReport(alg, "flexible", w is None, w)


def _check_alternative(alg, **_):
    # Linearizations of (x,x,y) = 0 and (y,x,x) = 0; equivalent in char 0.
    def left(x, y, z):
        return associator(x, y, z) + associator(y, x, z)

    def right(x, y, z):
        return associator(x, y, z) + associator(x, z, y)

    w = _first_basis_failure(
        alg, [("left-alternative", left), ("right-alternative", right)]
    )
    return PropertyReport(alg, "alternative", w is None, w)


def _check_lie_admissible(alg, **_):
    w = _first_basis_failure(alg, [("Jacobi identity for the commutator", jacobiator)])
    return PropertyReport(alg, "lie_admissible", w is None, w)


def _check_derivation_property(alg, **_):
    def defect(x, y, z):
        return commutator(z, multiply(x, y)) - (
            multiply(x, commutator(z, y)) + multiply(commutator(z, x), y)
        )

    w = _first_basis_failure(alg, [("bracket Leibniz rule", defect)])
    return PropertyReport(alg, "derivation_property", w is None, w)


def _bracketings(x: Element, n: int) -> list[Element]:
    """All parenthesizations of the n-th power of x."""
    levels: list[list[Element]] = [[], [x]]
    for m in range(2, n + 1):
        out = []
        for split in range(1, m):
            for a in levels[split]:
                for b in levels[m - split]:
                    out.append(multiply(a, b))
        levels.append(out)
    return levels[n]


def _sample_elements(alg, samples, seed):
    rng = random.Random(seed)
    return [alg.random_element(rng) for _ in range(samples)]


def _check_power_associative(alg, degree=4, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, **_):
    if degree < 3:
        raise ValueError("power associativity needs degree >= 3")
    candidates = alg.basis() + _sample_elements(alg, samples, seed)
    for x in candidates:
        for n in range(3, degree + 1):
            powers = _bracketings(x, n)
            ref = powers[0]
            for p in powers[1:]:
                d = p - ref
                if not d.is_zero():
                    w = Witness(defect=d, elements=(x,), law=f"power associativity at degree {n}")
                    return PropertyReport(alg, f"power_associative({degree})", False, w)
    return PropertyReport(alg, f"power_associative({degree})", True, None,
                          detail=f"basis plus {samples} seeded elements, degrees 3..{degree}")


def _check_jordan(alg, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, **_):
    basis = alg.basis()
    for i, j in itertools.product(range(alg.dim), repeat=2):
        d = multiply(basis[i], basis[j]) - multiply(basis[j], basis[i])
        if not d.is_zero():
            w = Witness(defect=d, indices=(i, j), law="commutativity")
            return PropertyReport(alg, "jordan", False, w)
    rng = random.Random(seed)
    pairs = [(basis[i], basis[j]) for i, j in itertools.product(range(alg.dim), repeat=2)]
    pairs += [(alg.random_element(rng), alg.random_element(rng)) for _ in range(samples)]
    for x, y in pairs:
        xx = multiply(x, x)
        d = multiply(multiply(x, y), xx) - multiply(x, multiply(y, xx))
        if not d.is_zero():
            w = Witness(defect=d, elements=(x, y), law="Jordan law (xy)(xx) = x(y(xx))")
            return PropertyReport(alg, "jordan", False, w)
    return PropertyReport(alg, "jordan", True, None,
                          detail=f"basis pairs plus {samples} seeded pairs")


def _check_unital(alg, **_):
    if alg.unital:
        return PropertyReport(alg, "unital", True, None, detail="external unit")
    # Look for an internal two-sided identity by solving u*e_j = e_j = e_j*u.
    dim = alg.dim
    rows, rhs = [], []
    for j in range(dim):
        for k in range(dim):
            rows.append([alg.structure[l][j][1][k] for l in range(dim)])
            rhs.append(ZERO + (1 if j == k else 0))
    for j in range(dim):
        for k in range(dim):
            rows.append([alg.structure[j][l][1][k] for l in range(dim)])
            rhs.append(ZERO + (1 if j == k else 0))
    solution, particular = solve_exact(rows, rhs)
    if solution is not None:
        u = alg.element(0, solution)
        return PropertyReport(alg, "unital", True, None, detail=f"internal unit {u}")
    # No identity exists; exhibit where the best candidate fails.
    u = alg.element(0, particular)
    for j in range(dim):
        ej = alg.basis_element(j)
        for d in (multiply(u, ej) - ej, multiply(ej, u) - ej):
            if not d.is_zero():
                w = Witness(defect=d, indices=(j,), law=f"no identity; best candidate {u}")
                return PropertyReport(alg, "unital", False, w)
    raise AssertionError("inconsistent identity system with no failing product")


_CHECKS = {
    "associative": _check_associative,
    "alternative": _check_alternative,
    "flexible": _check_flexible,
    "lie_admissible": _check_lie_admissible,
    "power_associative": _check_power_associative,
    "jordan": _check_jordan,
    "unital": _check_unital,
    "derivation_property": _check_derivation_property,
}


def check_property(alg: AlgebraDef, prop: str, *, degree: int = 4,
                   samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> PropertyReport:
    """Decide one named law for `alg`; see module docstring for method."""
    key = prop.replace("-", "_")
    if key.startswith("power_associative"):
        key = "power_associative"
    if key not in _CHECKS:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    return _CHECKS[key](alg, degree=degree, samples=samples, seed=seed)


def check_derivation_property(alg: AlgebraDef) -> PropertyReport:
    return _check_derivation_property(alg)


@dataclass(frozen=True)
class MyungVerdict:
    algebra: AlgebraDef
    equivalence_holds: bool
    derivation: PropertyReport
    flexible: PropertyReport
    lie_admissible: PropertyReport


def myung_equivalence(corpus: list[AlgebraDef]) -> list[MyungVerdict]:
    """Check derivation-property <=> (flexible and Lie-admissible) per algebra."""
    if not corpus:
        raise ValueError("corpus must be non-empty")
    out = []
    for alg in corpus:
        der = check_derivation_property(alg)
        flex = check_property(alg, "flexible")
        lie = check_property(alg, "lie_admissible")
        out.append(
            MyungVerdict(
                algebra=alg,
                equivalence_holds=der.holds == (flex.holds and lie.holds),
                derivation=der,
                flexible=flex,
                lie_admissible=lie,
            )
        )
    return out
