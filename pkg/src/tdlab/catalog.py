"""Example pairs: generators, JSON persistence, and the bundled corpus.

Generators build candidate matrices and hand them to the axiom verifier;
nothing here claims acceptance by construction.  Documents are single JSON
objects with a canonical byte encoding so saved fixtures diff cleanly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactla import PRIME, RATIONAL, ExactMatrix, FieldSpec
from .tdcore import AxiomVerdict, TDSystemData, build_system, verify_tridiagonal_pair


class DocumentError(ValueError):
    """A pair document violates the schema or cannot be decoded."""


@dataclass(frozen=True)
class PairDocument:
    """A labelled pair of square matrices over one field, ready to verify."""

    label: str
    field: FieldSpec
    n: int
    A: ExactMatrix
    Astar: ExactMatrix
    provenance: str = ""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DocumentError("n must be at least 1")
        for name, m in (("A", self.A), ("Astar", self.Astar)):
            if m.rows != self.n or m.cols != self.n:
                raise DocumentError(f"{name}: expected a {self.n}x{self.n} grid")
            if m.field != self.field:
                raise DocumentError(f"{name}: entries lie in the wrong field")


@dataclass(frozen=True)
class RejectedNotTD:
    """Outcome of a generator whose candidate failed the axiom verdict."""

    verdict: AxiomVerdict


def _coerce(field: FieldSpec, value):
    """Accept native scalars of the field alongside parseable input."""
    if field.kind == RATIONAL and isinstance(value, Fraction):
        return value
    return field.parse(value)


def gen_krawtchouk(d: int, field: FieldSpec) -> PairDocument:
    """Candidate pair on d+1 points: Astar = diag(d - 2i), A tridiagonal
    with subdiagonal i+1 and superdiagonal d - i.  Verified before return.

    Over a prime field, p must exceed 2d so the diagonal entries stay
    distinct; otherwise the eigenvalues collide."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if field.kind == PRIME and field.p <= 2 * d:
        raise ValueError(f"p = {field.p} collides eigenvalues; need p > {2 * d}")
    size = d + 1
    a = [[field.zero] * size for _ in range(size)]
    astar = [[field.zero] * size for _ in range(size)]
    for i in range(size):
        astar[i][i] = field.from_int(d - 2 * i)
        if i + 1 < size:
            a[i + 1][i] = field.from_int(i + 1)
            a[i][i + 1] = field.from_int(d - i)
    A = ExactMatrix.from_rows(field, a)
    Astar = ExactMatrix.from_rows(field, astar)
    verdict = verify_tridiagonal_pair(A, Astar)
    if not verdict.accepted:
        raise RuntimeError("krawtchouk candidate unexpectedly rejected")
    return PairDocument(
        label=f"krawtchouk-d{d}-{field.label}",
        field=field,
        n=size,
        A=A,
        Astar=Astar,
        provenance=f"gen_krawtchouk(d={d}, field={field.label})",
    )


def gen_split_form(theta, thetastar, phi, field: FieldSpec | None = None):
    """Candidate pair from split-form data: A lower bidiagonal with diagonal
    theta and subdiagonal ones, Astar upper bidiagonal with diagonal
    thetastar and superdiagonal phi.  Returns a PairDocument when the axiom
    verdict accepts, else RejectedNotTD carrying the verdict.

    Requires distinct theta, distinct thetastar, nonzero phi, and lengths
    d+1, d+1, d."""
    if field is None:
        field = FieldSpec.rational()
    th = [_coerce(field, v) for v in theta]
    ths = [_coerce(field, v) for v in thetastar]
    ph = [_coerce(field, v) for v in phi]
    if len(th) < 1 or len(th) != len(ths) or len(ph) != len(th) - 1:
        raise ValueError("need lengths d+1, d+1, d with d >= 0")
    if len(set(th)) != len(th):
        raise ValueError("theta values must be distinct")
    if len(set(ths)) != len(ths):
        raise ValueError("thetastar values must be distinct")
    if any(not v for v in ph):
        raise ValueError("phi values must be nonzero")
    size = len(th)
    d = size - 1
    a = [[field.zero] * size for _ in range(size)]
    astar = [[field.zero] * size for _ in range(size)]
    for i in range(size):
        a[i][i] = th[i]
        astar[i][i] = ths[i]
        if i + 1 < size:
            a[i + 1][i] = field.one
            astar[i][i + 1] = ph[i]
    A = ExactMatrix.from_rows(field, a)
    Astar = ExactMatrix.from_rows(field, astar)
    verdict = verify_tridiagonal_pair(A, Astar)
    if not verdict.accepted:
        return RejectedNotTD(verdict)
    return PairDocument(
        label=f"split-d{d}-{field.label}",
        field=field,
        n=size,
        A=A,
        Astar=Astar,
        provenance=f"gen_split_form(d={d}, field={field.label})",
    )


# ---------------------------------------------------------------------------
# persistence


def save(doc: PairDocument) -> bytes:
    """Canonical UTF-8 JSON bytes for a document.  Rationals become ints or
    reduced 'num/den' strings; the provenance key appears only when set."""
    if doc.field.kind == RATIONAL:
        field_obj = {"kind": "rational"}
    else:
        field_obj = {"kind": "prime", "p": doc.field.p}
    payload = {
        "label": doc.label,
        "field": field_obj,
        "n": doc.n,
        "A": [[doc.field.format(e) for e in doc.A.row(i)] for i in range(doc.n)],
        "Astar": [[doc.field.format(e) for e in doc.Astar.row(i)] for i in range(doc.n)],
    }
    if doc.provenance:
        payload["provenance"] = doc.provenance
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentError(message)


def _parse_grid(field: FieldSpec, name: str, grid, n: int) -> ExactMatrix:
    _require(isinstance(grid, list) and len(grid) == n,
             f"{name}: expected {n} rows")
    rows = []
    for i, row in enumerate(grid):
        _require(isinstance(row, list) and len(row) == n,
                 f"{name}[{i}]: expected {n} entries")
        parsed = []
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or isinstance(entry, float):
                raise DocumentError(f"{name}[{i}][{j}]: entry must be exact")
            if field.kind == PRIME and not isinstance(entry, int):
                raise DocumentError(
                    f"{name}[{i}][{j}]: prime-field entries must be integers")
            try:
                parsed.append(field.parse(entry))
            except ValueError as exc:
                raise DocumentError(f"{name}[{i}][{j}]: {exc}") from exc
        rows.append(parsed)
    return ExactMatrix.from_rows(field, rows)


def load(data: bytes) -> PairDocument:
    """Parse document bytes, rejecting anything outside the schema."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DocumentError(f"not UTF-8: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not JSON: {exc}") from exc
    _require(isinstance(obj, dict), "top level must be an object")
    required = {"label", "field", "n", "A", "Astar"}
    allowed = required | {"provenance"}
    unknown = set(obj) - allowed
    _require(not unknown, f"unknown keys: {sorted(unknown)}")
    missing = required - set(obj)
    _require(not missing, f"missing keys: {sorted(missing)}")

    label = obj["label"]
    _require(isinstance(label, str), "label: must be a string")
    provenance = obj.get("provenance", "")
    _require(isinstance(provenance, str), "provenance: must be a string")

    field_obj = obj["field"]
    _require(isinstance(field_obj, dict) and "kind" in field_obj, "field: must give a kind")
    if field_obj["kind"] == "rational":
        _require(set(field_obj) == {"kind"}, "field: rational takes no other keys")
        field = FieldSpec.rational()
    elif field_obj["kind"] == "prime":
        _require(set(field_obj) == {"kind", "p"}, "field: prime takes exactly p")
        p = field_obj["p"]
        _require(isinstance(p, int) and not isinstance(p, bool),
                 "field.p: must be an integer")
        try:
            field = FieldSpec.prime(p)
        except ValueError as exc:
            raise DocumentError(f"field.p: {p} is not prime") from exc
    else:
        raise DocumentError(f"field.kind: unknown kind {field_obj['kind']!r}")

    n = obj["n"]
    _require(isinstance(n, int) and not isinstance(n, bool), "n: must be an integer")
    _require(n >= 1, "n: must be at least 1")
    A = _parse_grid(field, "A", obj["A"], n)
    Astar = _parse_grid(field, "Astar", obj["Astar"], n)
    return PairDocument(label=label, field=field, n=n, A=A, Astar=Astar,
                        provenance=provenance)


# ---------------------------------------------------------------------------
# bundled corpus

# Split-form parameters found by searching small integer data with the axiom
# verdict as the filter, then frozen.  See tests for the acceptance replay.
_SPLIT_D3_THETA = (3, 1, -1, -3)
_SPLIT_D3_THETASTAR = (3, 1, -1, -3)
_SPLIT_D3_PHI = (3, 4, 3)


@lru_cache(maxsize=None)
def fixture_corpus() -> tuple[PairDocument, ...]:
    """The bundled examples: the tridiagonal family over the rationals and
    two prime fields for diameters one through four, plus one frozen
    split-form pair."""
    fields = (FieldSpec.rational(), FieldSpec.prime(13), FieldSpec.prime(101))
    docs = [gen_krawtchouk(d, f) for d in range(1, 5) for f in fields]
    split = gen_split_form(_SPLIT_D3_THETA, _SPLIT_D3_THETASTAR, _SPLIT_D3_PHI)
    if isinstance(split, RejectedNotTD):
        raise RuntimeError("frozen split-form fixture no longer verifies")
    docs.append(split)
    return tuple(docs)


@lru_cache(maxsize=None)
def document_system(doc: PairDocument) -> TDSystemData:
    """The system a document induces under the default orderings."""
    return build_system(doc.A, doc.Astar)
