"""Tridiagonal pairs and systems over an exact field.

A pair of diagonalizable operators is accepted when each one acts
tridiagonally on some ordering of the other's eigenspaces and the two
operators admit no common proper invariant subspace.  This module verifies
those axioms from raw matrices, assembles the resulting systems (operators
plus ordered primitive idempotents), and implements the dihedral group of
order eight that permutes a system's eight relatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .exactla import (
    EigenData,
    EigenFailure,
    ExactMatrix,
    FieldSpec,
    SubspaceBasis,
    eigen_data,
    rref,
)
from .report import CheckResult


class Axiom(Enum):
    """The four defining requirements on an operator pair.

    TRIDIAG_A fails when no ordering of the first operator's eigenspaces is
    tridiagonalized by the second operator; TRIDIAG_ASTAR is the mirror.
    """

    DIAGONALIZABLE = "diagonalizable"
    TRIDIAG_A = "tridiagonal_a"
    TRIDIAG_ASTAR = "tridiagonal_astar"
    IRREDUCIBLE = "irreducible"


@dataclass(frozen=True)
class AxiomFailure:
    axiom: Axiom
    witness: str


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of verifying the pair axioms; diameter and shape are reported
    only on acceptance."""

    accepted: bool
    diameter: int | None
    shape: tuple[int, ...] | None
    failures: tuple[AxiomFailure, ...]


@dataclass(frozen=True)
class TDSystemData:
    """An accepted pair together with one standard ordering on each side.

    E[i] is the primitive idempotent for theta[i] (likewise the starred
    family), and rho[i] is the dimension of the i-th starred eigenspace.
    """

    field: FieldSpec
    n: int
    d: int
    A: ExactMatrix
    Astar: ExactMatrix
    theta: tuple
    thetastar: tuple
    E: tuple[ExactMatrix, ...]
    Estar: tuple[ExactMatrix, ...]
    rho: tuple[int, ...]

    def validate(self) -> None:
        """Recheck every structural invariant; raises ValueError on defects."""
        d = self.d
        if not (len(self.theta) == len(self.thetastar) == d + 1):
            raise ValueError("eigenvalue count does not match the diameter")
        if not (len(self.E) == len(self.Estar) == d + 1):
            raise ValueError("idempotent count does not match the diameter")
        if len(set(self.theta)) != d + 1 or len(set(self.thetastar)) != d + 1:
            raise ValueError("eigenvalues must be distinct")
        ident = ExactMatrix.identity(self.field, self.n)
        for mats, vals, op in ((self.E, self.theta, self.A), (self.Estar, self.thetastar, self.Astar)):
            total = ExactMatrix.zeros(self.field, self.n, self.n)
            spectral = ExactMatrix.zeros(self.field, self.n, self.n)
            for i, e in enumerate(mats):
                total = total + e
                spectral = spectral + e.scale(vals[i])
                for j, f in enumerate(mats):
                    prod = e * f
                    expected = e if i == j else ExactMatrix.zeros(self.field, self.n, self.n)
                    if prod != expected:
                        raise ValueError(f"idempotent product defect at ({i}, {j})")
            if total != ident:
                raise ValueError("idempotents do not sum to the identity")
            if spectral != op:
                raise ValueError("spectral decomposition does not recover the operator")
        for mats, other in ((self.E, self.Astar), (self.Estar, self.A)):
            for i in range(d + 1):
                for j in range(d + 1):
                    if abs(i - j) > 1 and not (mats[j] * other * mats[i]).is_zero():
                        raise ValueError(f"tridiagonality defect at ({i}, {j})")
        for i, e in enumerate(self.Estar):
            if rref(e).rank != self.rho[i]:
                raise ValueError("shape vector does not match the idempotent ranks")


# ---------------------------------------------------------------------------
# dihedral symmetry


_DOWN = "d"   # reverse the starred idempotent ordering
_DDOWN = "D"  # reverse the unstarred idempotent ordering
_STAR = "*"   # swap the two operator/idempotent pairs

_ALIASES = {"↓": _DOWN, "⇓": _DDOWN}


@dataclass(frozen=True)
class D4Element:
    """Element of the dihedral symmetry group acting on systems.

    The three generating involutions are written 'd' (reverse the starred
    ordering), 'D' (reverse the unstarred ordering) and '*' (swap the
    pairs); 'd' and 'D' commute while moving past '*' exchanges them.
    Words are kept in the normal form d^a D^b *^c.
    """

    word: str

    @classmethod
    def identity(cls) -> "D4Element":
        return cls("")

    @classmethod
    def parse(cls, text: str) -> "D4Element":
        a = b = c = 0
        for ch in text:
            ch = _ALIASES.get(ch, ch)
            if ch in " \t1":
                continue
            if ch == _DOWN:
                if c:
                    b ^= 1
                else:
                    a ^= 1
            elif ch == _DDOWN:
                if c:
                    a ^= 1
                else:
                    b ^= 1
            elif ch == _STAR:
                c ^= 1
            else:
                raise ValueError(f"unknown symmetry letter: {ch!r}")
        return cls(_DOWN * a + _DDOWN * b + _STAR * c)

    @classmethod
    def all_elements(cls) -> tuple["D4Element", ...]:
        return tuple(cls(w) for w in ("", "d", "D", "dD", "*", "d*", "D*", "dD*"))

    def compose(self, other: "D4Element") -> "D4Element":
        """Apply self first, then other."""
        return D4Element.parse(self.word + other.word)

    @property
    def display(self) -> str:
        return self.word if self.word else "1"


def apply_transforms(system: TDSystemData, letters: str) -> TDSystemData:
    """Apply a raw letter sequence to a system, one involution at a time.

    Unlike d4_relative this does not reduce the word first, so it is the
    right tool for checking that the group relations act as the identity.
    """
    out = system
    for ch in letters:
        ch = _ALIASES.get(ch, ch)
        if ch in " \t1":
            continue
        if ch == _DOWN:
            out = _replace(out, thetastar=out.thetastar[::-1], Estar=out.Estar[::-1],
                           rho=out.rho[::-1])
        elif ch == _DDOWN:
            out = _replace(out, theta=out.theta[::-1], E=out.E[::-1])
        elif ch == _STAR:
            out = TDSystemData(
                field=out.field, n=out.n, d=out.d,
                A=out.Astar, Astar=out.A,
                theta=out.thetastar, thetastar=out.theta,
                E=out.Estar, Estar=out.E,
                rho=tuple(rref(e).rank for e in out.E),
            )
        else:
            raise ValueError(f"unknown symmetry letter: {ch!r}")
    return out


def _replace(system: TDSystemData, **changes) -> TDSystemData:
    fields = {
        "field": system.field, "n": system.n, "d": system.d,
        "A": system.A, "Astar": system.Astar,
        "theta": system.theta, "thetastar": system.thetastar,
        "E": system.E, "Estar": system.Estar, "rho": system.rho,
    }
    fields.update(changes)
    return TDSystemData(**fields)


def d4_relative(system: TDSystemData, g: "D4Element | str") -> TDSystemData:
    """The relative of a system under a symmetry group element."""
    if isinstance(g, str):
        g = D4Element.parse(g)
    out = apply_transforms(system, g.word)
    out.validate()
    return out


# ---------------------------------------------------------------------------
# idempotents and standard orderings


def primitive_idempotents(eigenvalues, m: ExactMatrix) -> list[ExactMatrix]:
    """Primitive idempotents of a diagonalizable matrix, one per eigenvalue,
    via the Lagrange product over the other eigenvalues."""
    vals = list(eigenvalues)
    if len(set(vals)) != len(vals):
        raise ValueError("eigenvalues must be distinct")
    field = m.field
    ident = ExactMatrix.identity(field, m.rows)
    out = []
    for i, ti in enumerate(vals):
        acc = ident
        denom = field.one
        for j, tj in enumerate(vals):
            if j == i:
                continue
            acc = acc * (m - ident.scale(tj))
            denom = field.mul(denom, field.sub(ti, tj))
        out.append(acc.scale(field.inv(denom)))
    return out


@lru_cache(maxsize=None)
def detect_standard_orderings(m: ExactMatrix, n_op: ExactMatrix) -> tuple[tuple, ...]:
    """Eigenvalue orderings of m for which n_op acts tridiagonally.

    Builds the graph on m's eigenspaces whose edges join spaces coupled by
    n_op; the orderings are exactly its end-to-end path traversals.  The
    result is empty when the graph is not a simple path through all the
    eigenspaces, holds one ordering when m has a single eigenspace, and
    otherwise holds two orderings, each the reverse of the other, sorted so
    the one with the smaller leading eigenvalue comes first.
    """
    ed = eigen_data(m)
    if not isinstance(ed, EigenData):
        raise ValueError("standard orderings need a diagonalizable matrix with "
                         "eigenvalues in the field")
    field = m.field
    vals = ed.eigenvalues
    k = len(vals)
    if k == 1:
        return ((vals[0],),)
    idems = primitive_idempotents(vals, m)
    adjacency = [set() for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if not (idems[j] * n_op * idems[i]).is_zero() or not (
                idems[i] * n_op * idems[j]
            ).is_zero():
                adjacency[i].add(j)
                adjacency[j].add(i)
    degrees = [len(a) for a in adjacency]
    if any(deg > 2 for deg in degrees) or sum(1 for deg in degrees if deg == 1) != 2:
        return ()
    start = next(i for i, deg in enumerate(degrees) if deg == 1)
    order = [start]
    prev = -1
    while True:
        nxt = [v for v in adjacency[order[-1]] if v != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) != k:
        return ()
    forward = tuple(vals[i] for i in order)
    backward = forward[::-1]
    pair = sorted((forward, backward), key=lambda o: field.sort_key(o[0]))
    return tuple(pair)


# ---------------------------------------------------------------------------
# irreducibility


class IrreducibilityKind(Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    kind: IrreducibilityKind
    witness: tuple[tuple, ...] | None
    wordspan_dim: int


def word_span(a: ExactMatrix, astar: ExactMatrix) -> tuple[SubspaceBasis, list[ExactMatrix]]:
    """Span of all words in the two operators, with spanning matrices.

    Left-multiplying a worklist seeded with the identity reaches every word;
    the dimension is capped by n^2, so the loop terminates.
    """
    n = a.rows
    span = SubspaceBasis(n * n, a.field)
    mats: list[ExactMatrix] = []

    def push(mx: ExactMatrix) -> None:
        if span.add(mx.entries):
            mats.append(mx)

    push(ExactMatrix.identity(a.field, n))
    i = 0
    while i < len(mats) and span.dim < n * n:
        base = mats[i]
        i += 1
        push(a * base)
        push(astar * base)
    return span, mats


def invariant_closure(vec, a: ExactMatrix, astar: ExactMatrix) -> SubspaceBasis:
    """Smallest subspace containing vec that both operators preserve."""
    n = a.rows
    span = SubspaceBasis(n, a.field)
    vecs: list[tuple] = []

    def push(v) -> None:
        if span.add(v):
            vecs.append(tuple(v))

    push(tuple(vec))
    i = 0
    while i < len(vecs) and span.dim < n:
        base = vecs[i]
        i += 1
        push(a.apply(base))
        push(astar.apply(base))
    return span


def check_irreducible(a: ExactMatrix, astar: ExactMatrix) -> IrreducibilityVerdict:
    """Decide whether the pair has a common proper invariant subspace.

    Three layers: a full word span certifies irreducibility outright; a
    proper closure of any eigenvector is a reducibility witness; and when
    every eigenspace of one operator is one dimensional, full closures of
    all its eigenvectors again certify irreducibility (any invariant
    subspace must contain one of them).  Anything else is UNDETERMINED.
    """
    if a.field != astar.field or (a.rows, a.cols) != (astar.rows, astar.cols) or not a.is_square:
        raise ValueError("need two square matrices over one field")
    n = a.rows
    span, _ = word_span(a, astar)
    if span.dim == n * n:
        return IrreducibilityVerdict(IrreducibilityKind.IRREDUCIBLE, None, span.dim)
    for op in (a, astar):
        ed = eigen_data(op)
        if not isinstance(ed, EigenData):
            continue
        all_lines = all(len(sp) == 1 for sp in ed.eigenspaces)
        for sp in ed.eigenspaces:
            for vec in sp:
                closure = invariant_closure(vec, a, astar)
                if closure.dim < n:
                    return IrreducibilityVerdict(
                        IrreducibilityKind.REDUCIBLE, closure.vectors, span.dim
                    )
        if all_lines:
            return IrreducibilityVerdict(IrreducibilityKind.IRREDUCIBLE, None, span.dim)
    return IrreducibilityVerdict(IrreducibilityKind.UNDETERMINED, None, span.dim)


# ---------------------------------------------------------------------------
# the axiom verifier and system constructor


_EIGEN_WITNESS = {
    EigenFailure.NOT_DIAGONALIZABLE: "eigenspaces do not fill the space",
    EigenFailure.EIGENVALUE_OUTSIDE_FIELD: "characteristic polynomial does not split over the field",
}


@lru_cache(maxsize=None)
def verify_tridiagonal_pair(a: ExactMatrix, astar: ExactMatrix) -> AxiomVerdict:
    """Run the four pair axioms on raw matrices and report a verdict.

    Diagonalizability of both operators is checked first; the two
    tridiagonality axioms run only when it holds, and irreducibility runs
    last.  An UNDETERMINED irreducibility outcome is surfaced as a failure
    witness rather than silently accepted.
    """
    if a.field != astar.field:
        raise ValueError("operators must share a field")
    if (a.rows, a.cols) != (astar.rows, astar.cols) or not a.is_square:
        raise ValueError("operators must be square of equal size")
    failures: list[AxiomFailure] = []
    eda = eigen_data(a)
    edastar = eigen_data(astar)
    for name, ed in (("A", eda), ("Astar", edastar)):
        if isinstance(ed, EigenFailure):
            failures.append(AxiomFailure(Axiom.DIAGONALIZABLE, f"{name}: {_EIGEN_WITNESS[ed]}"))
    if failures:
        return AxiomVerdict(False, None, None, tuple(failures))
    if not detect_standard_orderings(a, astar):
        failures.append(AxiomFailure(
            Axiom.TRIDIAG_A,
            "no ordering of the first operator's eigenspaces is tridiagonalized by the second",
        ))
    orderings_star = detect_standard_orderings(astar, a)
    if not orderings_star:
        failures.append(AxiomFailure(
            Axiom.TRIDIAG_ASTAR,
            "no ordering of the second operator's eigenspaces is tridiagonalized by the first",
        ))
    if failures:
        return AxiomVerdict(False, None, None, tuple(failures))
    irr = check_irreducible(a, astar)
    if irr.kind == IrreducibilityKind.REDUCIBLE:
        failures.append(AxiomFailure(
            Axiom.IRREDUCIBLE,
            f"common invariant subspace of dimension {len(irr.witness)}",
        ))
    elif irr.kind == IrreducibilityKind.UNDETERMINED:
        failures.append(AxiomFailure(
            Axiom.IRREDUCIBLE,
            "irreducibility undetermined over this field; rejected conservatively",
        ))
    if failures:
        return AxiomVerdict(False, None, None, tuple(failures))
    d = len(eda.eigenvalues) - 1
    if d != len(edastar.eigenvalues) - 1:
        # The eigenspace counts of an accepted pair always agree; reaching
        # this line means the verifier itself is inconsistent.
        raise RuntimeError("eigenspace counts differ on an otherwise accepted pair")
    dim_of = dict(zip(edastar.eigenvalues, edastar.dims))
    shape = tuple(dim_of[t] for t in orderings_star[0])
    return AxiomVerdict(True, d, shape, ())


def build_system(
    a: ExactMatrix,
    astar: ExactMatrix,
    ordering_a: int = 0,
    ordering_astar: int = 0,
) -> TDSystemData:
    """Assemble a system from an accepted pair and one ordering choice per
    side (index into the detected standard orderings, smaller leading
    eigenvalue first)."""
    verdict = verify_tridiagonal_pair(a, astar)
    if not verdict.accepted:
        reasons = "; ".join(f"{f.axiom.value}: {f.witness}" for f in verdict.failures)
        raise ValueError(f"not a tridiagonal pair ({reasons})")
    orderings = detect_standard_orderings(a, astar)
    orderings_star = detect_standard_orderings(astar, a)
    if not 0 <= ordering_a < len(orderings):
        raise ValueError(f"ordering_a must be in [0, {len(orderings)})")
    if not 0 <= ordering_astar < len(orderings_star):
        raise ValueError(f"ordering_astar must be in [0, {len(orderings_star)})")
    theta = orderings[ordering_a]
    thetastar = orderings_star[ordering_astar]
    idems = tuple(primitive_idempotents(theta, a))
    idems_star = tuple(primitive_idempotents(thetastar, astar))
    system = TDSystemData(
        field=a.field,
        n=a.rows,
        d=verdict.diameter,
        A=a,
        Astar=astar,
        theta=theta,
        thetastar=thetastar,
        E=idems,
        Estar=idems_star,
        rho=tuple(rref(e).rank for e in idems_star),
    )
    system.validate()
    return system


# ---------------------------------------------------------------------------
# system-level certification checks


def check_super_tridiagonal(system: TDSystemData) -> CheckResult:
    """Products F_i X^k F_j vanish whenever k < |i - j|, in both the starred
    and unstarred directions."""
    d = system.d
    apow = [system.A.power(k) for k in range(d + 1)]
    aspow = [system.Astar.power(k) for k in range(d + 1)]
    violations = []
    checked = 0
    for name, idems, pows in (("starred_outer", system.Estar, apow),
                              ("unstarred_outer", system.E, aspow)):
        for i in range(d + 1):
            for j in range(d + 1):
                for k in range(abs(i - j)):
                    checked += 1
                    if not (idems[i] * pows[k] * idems[j]).is_zero():
                        violations.append({"family": name, "i": i, "j": j, "k": k})
    return CheckResult(
        "system.super_tridiagonal",
        not violations,
        {"checked": checked, "violations": violations},
    )


def idempotent_algebra_check(system: TDSystemData) -> CheckResult:
    """Recompute the idempotent algebra invariants as a reportable check."""
    try:
        system.validate()
    except ValueError as err:
        return CheckResult("system.idempotent_algebra", False, {"defect": str(err)})
    return CheckResult("system.idempotent_algebra", True, {"d": system.d, "n": system.n})


def orderings_check(system: TDSystemData) -> CheckResult:
    """Each side admits exactly two standard orderings for d >= 1 (one for
    d = 0), and the two are reverses of each other."""
    details = {}
    ok = True
    for name, m, n_op in (("unstarred", system.A, system.Astar),
                          ("starred", system.Astar, system.A)):
        orderings = detect_standard_orderings(m, n_op)
        expected = 1 if system.d == 0 else 2
        side_ok = len(orderings) == expected
        if expected == 2 and side_ok:
            side_ok = orderings[1] == orderings[0][::-1]
        details[name] = {"count": len(orderings), "mutually_reversed": side_ok}
        ok = ok and side_ok
    return CheckResult("system.orderings_unique", ok, details)


_RELATORS = (
    ("**", ""),
    ("dd", ""),
    ("DD", ""),
    ("dD", "Dd"),
    ("D*", "*d"),
    ("d*", "*D"),
)


def relators_check(system: TDSystemData) -> CheckResult:
    """The defining relations of the symmetry group act as the identity."""
    failures = []
    for left, right in _RELATORS:
        if apply_transforms(system, left) != apply_transforms(system, right):
            failures.append(f"{left or '1'} != {right or '1'}")
    return CheckResult(
        "system.d4_relators",
        not failures,
        {"relators": len(_RELATORS), "failures": failures},
    )


# ---------------------------------------------------------------------------
# conjecture probe


@dataclass(frozen=True)
class ConjectureProbe:
    """Whether the corner algebra of the word span is generated by the
    cornered powers of the first operator."""

    generated: bool
    wordspan_dim: int
    corner_dim: int
    generated_dim: int


def probe_corner_generation(system: TDSystemData) -> ConjectureProbe:
    """Compare the corner slice of the full word span against the subalgebra
    generated inside it by the cornered powers of A.

    The corner of a matrix X is Estar[0] * X * Estar[0].  The subalgebra is
    closed under products only; the corner idempotent itself appears as the
    zeroth cornered power, so the closure is unital inside the corner.
    """
    n = system.n
    field = system.field
    e0 = system.Estar[0]
    span, mats = word_span(system.A, system.Astar)
    corner = SubspaceBasis(n * n, field)
    for mx in mats:
        corner.add((e0 * mx * e0).entries)
    gen = SubspaceBasis(n * n, field)
    gen_mats: list[ExactMatrix] = []

    def push(mx: ExactMatrix) -> None:
        if gen.add(mx.entries):
            gen_mats.append(mx)

    for k in range(system.d + 1):
        push(e0 * system.A.power(k) * e0)
    i = 0
    while i < len(gen_mats):
        base = gen_mats[i]
        i += 1
        for other in list(gen_mats):
            push(base * other)
            push(other * base)
    return ConjectureProbe(
        generated=(gen == corner),
        wordspan_dim=span.dim,
        corner_dim=corner.dim,
        generated_dim=gen.dim,
    )
