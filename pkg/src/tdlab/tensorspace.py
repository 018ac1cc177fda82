"""The triple tensor space over a system and its certified relation space.

Let D be the span of the powers of A and Dstar that of Astar; both have
dimension d + 1.  Elements of D (x) Dstar (x) D are stored as coefficient
vectors over the pure-power basis A^i (x) Astar^t (x) A^j.  The corner map
sends X (x) Y (x) Z to Estar_0 X Y Z Estar_0, and the relation space is the
span of three families of tensors that the corner map provably annihilates.
Everything this module certifies (dimension laws, graded slices, transpose
symmetry, complement bases, span equality with commuting corners) reduces
to exact rank computations in these coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .exactla import (
    ExactMatrix,
    FieldSpec,
    Polynomial,
    SubspaceBasis,
    rref,
    solve_row_combination,
)
from .polybasis import build_poly_family
from .report import CheckResult
from .tdcore import TDSystemData


class MiddleBasis(Enum):
    """Which expansion to use for the middle slot of an idempotent tensor."""

    POWER = "power"          # Astar^t
    TAU_STAR = "taustar"     # taustar_t evaluated at Astar
    PROJECTOR = "projector0"  # Estar_0


@dataclass(frozen=True)
class TensorElement:
    """Element of the triple tensor space in pure-power coordinates.

    coeffs[(i*(d+1) + t)*(d+1) + j] is the coefficient of
    A^i (x) Astar^t (x) A^j.
    """

    d: int
    coeffs: tuple
    field: FieldSpec

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("diameter must be nonnegative")
        if len(self.coeffs) != (self.d + 1) ** 3:
            raise ValueError("coefficient count must be (d+1)^3")

    @classmethod
    def zero(cls, d: int, field: FieldSpec) -> "TensorElement":
        return cls(d, (field.zero,) * (d + 1) ** 3, field)

    @classmethod
    def basis_element(cls, d: int, i: int, t: int, j: int, field: FieldSpec) -> "TensorElement":
        coeffs = [field.zero] * (d + 1) ** 3
        coeffs[(i * (d + 1) + t) * (d + 1) + j] = field.one
        return cls(d, tuple(coeffs), field)

    def index(self, i: int, t: int, j: int) -> int:
        s = self.d + 1
        return (i * s + t) * s + j

    def coeff(self, i: int, t: int, j: int):
        return self.coeffs[self.index(i, t, j)]

    def _check(self, other: "TensorElement") -> None:
        if self.d != other.d or self.field != other.field:
            raise ValueError("tensor shape or field mismatch")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        add = self.field.add
        return TensorElement(
            self.d, tuple(add(a, b) for a, b in zip(self.coeffs, other.coeffs)), self.field
        )

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        sub = self.field.sub
        return TensorElement(
            self.d, tuple(sub(a, b) for a, b in zip(self.coeffs, other.coeffs)), self.field
        )

    def scale(self, c) -> "TensorElement":
        mul = self.field.mul
        return TensorElement(self.d, tuple(mul(c, a) for a in self.coeffs), self.field)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def pure_tensor(x, y, z, field: FieldSpec) -> TensorElement:
    """Tensor of three coefficient vectors over the pure-power basis."""
    if not (len(x) == len(y) == len(z)):
        raise ValueError("slot coefficient vectors must have equal length")
    s = len(x)
    if s == 0:
        raise ValueError("slot coefficient vectors must be nonempty")
    mul = field.mul
    zero = field.zero
    coeffs = [zero] * (s * s * s)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for t, yt in enumerate(y):
            if not yt:
                continue
            xy = mul(xi, yt)
            base = (i * s + t) * s
            for j, zj in enumerate(z):
                if zj:
                    coeffs[base + j] = mul(xy, zj)
    return TensorElement(s - 1, tuple(coeffs), field)


def outer_transpose(elem: TensorElement) -> TensorElement:
    """Swap the two outer slots; an involution preserving every t-slice."""
    s = elem.d + 1
    coeffs = [
        elem.coeffs[(j * s + t) * s + i]
        for i in range(s)
        for t in range(s)
        for j in range(s)
    ]
    return TensorElement(elem.d, tuple(coeffs), elem.field)


# ---------------------------------------------------------------------------
# the per-system model: power expansions, corner table, relation spans


class _TensorModel:
    """Everything the tensor checks reuse for one system, computed once."""

    def __init__(self, system: TDSystemData):
        self.system = system
        self.field = system.field
        self.d = system.d
        d, field = self.d, self.field
        fam = build_poly_family(system)
        self.taustar = [fam.taustar[t].padded(d + 1) for t in range(d + 1)]
        self.idem_coeffs = [
            _lagrange_coeffs(system.theta, i, field) for i in range(d + 1)
        ]
        self.idem_star_coeffs = [
            _lagrange_coeffs(system.thetastar, i, field) for i in range(d + 1)
        ]
        self.units = [
            tuple(field.one if k == i else field.zero for k in range(d + 1))
            for i in range(d + 1)
        ]
        self._corner_table = None
        self._relation_space = None
        self._relation_slices: dict[int, SubspaceBasis] = {}

    # -- expansions --------------------------------------------------------

    def middle(self, t: int, kind: MiddleBasis) -> tuple:
        if kind == MiddleBasis.POWER:
            return self.units[t]
        if kind == MiddleBasis.TAU_STAR:
            return self.taustar[t]
        return self.idem_star_coeffs[0]

    def idem_tensor(self, i: int, t: int, j: int, kind: MiddleBasis) -> TensorElement:
        return pure_tensor(
            self.idem_coeffs[i], self.middle(t, kind), self.idem_coeffs[j], self.field
        )

    def power_tensor(self, i: int, t: int, j: int, kind: MiddleBasis) -> TensorElement:
        return pure_tensor(self.units[i], self.middle(t, kind), self.units[j], self.field)

    # -- corner products ----------------------------------------------------

    @property
    def corner_table(self) -> list:
        """corner_table[i][t][j] = Estar_0 A^i Astar^t A^j Estar_0."""
        if self._corner_table is None:
            d = self.d
            sysd = self.system
            e0 = sysd.Estar[0]
            apow = [sysd.A.power(k) for k in range(d + 1)]
            aspow = [sysd.Astar.power(k) for k in range(d + 1)]
            left = [e0 * apow[i] for i in range(d + 1)]
            right = [apow[j] * e0 for j in range(d + 1)]
            self._corner_table = [
                [[lm * right[j] for j in range(d + 1)]
                 for lm in (left[i] * aspow[t] for t in range(d + 1))]
                for i in range(d + 1)
            ]
        return self._corner_table

    # -- relation spans ------------------------------------------------------

    @property
    def relation_space(self) -> SubspaceBasis:
        if self._relation_space is None:
            d, field = self.d, self.field
            span = SubspaceBasis((d + 1) ** 3, field)
            for j in range(d + 1):
                for i in range(j):
                    mid = self.idem_star_coeffs[j]
                    for k in range(d + 1):
                        span.add(pure_tensor(self.units[i], mid, self.units[k], field).coeffs)
                        span.add(pure_tensor(self.units[k], mid, self.units[i], field).coeffs)
            for a in range(d + 1):
                for b in range(d + 1):
                    for t in range(abs(a - b)):
                        span.add(self.idem_tensor(a, t, b, MiddleBasis.POWER).coeffs)
            self._relation_space = span
        return self._relation_space

    def relation_slice(self, t: int) -> SubspaceBasis:
        if t not in self._relation_slices:
            d, field = self.d, self.field
            span = SubspaceBasis((d + 1) ** 3, field)
            for i in range(t):
                for j in range(d + 1):
                    span.add(self.power_tensor(i, t, j, MiddleBasis.TAU_STAR).coeffs)
                    span.add(self.power_tensor(j, t, i, MiddleBasis.TAU_STAR).coeffs)
            for a in range(d + 1):
                for b in range(d + 1):
                    if t < abs(a - b):
                        span.add(self.idem_tensor(a, t, b, MiddleBasis.TAU_STAR).coeffs)
            self._relation_slices[t] = span
        return self._relation_slices[t]


def _lagrange_coeffs(values, i: int, field: FieldSpec) -> tuple:
    """Coefficients, in the power basis, of the idempotent for values[i]."""
    others = [v for k, v in enumerate(values) if k != i]
    numerator = Polynomial.from_roots(field, others)
    return numerator.scale(field.inv(numerator(values[i]))).padded(len(values))


@lru_cache(maxsize=None)
def _model(system: TDSystemData) -> _TensorModel:
    return _TensorModel(system)


# ---------------------------------------------------------------------------
# public construction surface


def idempotent_tensor_coords(
    system: TDSystemData, i: int, t: int, j: int, middle: MiddleBasis = MiddleBasis.TAU_STAR
) -> TensorElement:
    """Pure-power coordinates of E_i (x) M_t (x) E_j, where the middle slot
    M_t is chosen by `middle` (a power of Astar, a starred vanishing
    polynomial at Astar, or the zeroth starred idempotent)."""
    d = system.d
    for name, idx in (("i", i), ("t", t), ("j", j)):
        if not 0 <= idx <= d:
            raise ValueError(f"index {name} out of range [0, {d}]")
    return _model(system).idem_tensor(i, t, j, middle)


def corner_eval(system: TDSystemData, elem: TensorElement) -> ExactMatrix:
    """Image of a tensor under the corner map
    X (x) Y (x) Z -> Estar_0 X Y Z Estar_0."""
    if elem.d != system.d or elem.field != system.field:
        raise ValueError("tensor does not match the system")
    table = _model(system).corner_table
    d = system.d
    out = ExactMatrix.zeros(system.field, system.n, system.n)
    idx = 0
    for i in range(d + 1):
        for t in range(d + 1):
            for j in range(d + 1):
                c = elem.coeffs[idx]
                idx += 1
                if c:
                    out = out + table[i][t][j].scale(c)
    return out


def build_relation_slice(system: TDSystemData, t: int) -> SubspaceBasis:
    """Reduced basis of the degree-t slice of the relation space: tensors
    with middle slot taustar_t(Astar) whose outer low powers or separated
    idempotent indices force the corner map to vanish."""
    if not 0 <= t <= system.d:
        raise ValueError(f"t out of range [0, {system.d}]")
    return _model(system).relation_slice(t).copy()


def build_relation_space(system: TDSystemData) -> SubspaceBasis:
    """Reduced basis of the full relation space (all three generating
    families, every degree)."""
    return _model(system).relation_space.copy()


# ---------------------------------------------------------------------------
# certification checks


def check_kernel(system: TDSystemData) -> CheckResult:
    """The corner map annihilates every basis vector of the relation space."""
    model = _model(system)
    span = model.relation_space
    nonzero = 0
    for row in span.vectors:
        image = corner_eval(system, TensorElement(system.d, row, system.field))
        if not image.is_zero():
            nonzero += 1
    return CheckResult(
        "kernel.annihilated",
        nonzero == 0,
        {"relation_dim": span.dim, "nonzero_images": nonzero},
    )


def check_dimension_laws(system: TDSystemData) -> list[CheckResult]:
    """Slice dimensions d^2 + d + t, total dimension d(d+1)(2d+3)/2 with
    codimension (d+1)(d+2)/2, and the grading: the slices are independent
    and fill the relation space."""
    model = _model(system)
    d = system.d
    ambient = (d + 1) ** 3
    per_t = []
    slices_ok = True
    for t in range(d + 1):
        got = model.relation_slice(t).dim
        want = d * d + d + t
        per_t.append({"t": t, "dim": got, "expected": want})
        slices_ok = slices_ok and got == want
    total = model.relation_space.dim
    want_total = d * (d + 1) * (2 * d + 3) // 2
    want_codim = (d + 1) * (d + 2) // 2
    total_ok = total == want_total and ambient - total == want_codim

    concat = SubspaceBasis(ambient, system.field)
    grown = 0
    members = True
    for t in range(d + 1):
        for row in model.relation_slice(t).vectors:
            if not model.relation_space.contains(row):
                members = False
            if concat.add(row):
                grown += 1
    grading_ok = members and grown == total == sum(p["dim"] for p in per_t)
    return [
        CheckResult("dims.slices", slices_ok, {"per_t": per_t}),
        CheckResult(
            "dims.total",
            total_ok,
            {"dim": total, "expected": want_total,
             "codim": ambient - total, "expected_codim": want_codim},
        ),
        CheckResult(
            "dims.grading",
            grading_ok,
            {"slices_inside": members, "joint_rank": grown, "total": total},
        ),
    ]


def check_transpose_properties(system: TDSystemData) -> list[CheckResult]:
    """The outer transpose is an involution, preserves the relation space
    and each slice, and pushes every pure-power basis vector into the
    relation space up to transpose (v minus its transpose is a relation)."""
    model = _model(system)
    d, field = system.d, system.field
    s = d + 1

    involution_ok = True
    for i in range(s):
        for t in range(s):
            for j in range(s):
                b = TensorElement.basis_element(d, i, t, j, field)
                if outer_transpose(outer_transpose(b)) != b:
                    involution_ok = False

    space = model.relation_space
    invariant_ok = all(
        space.contains(outer_transpose(TensorElement(d, row, field)).coeffs)
        for row in space.vectors
    )
    slice_ok = True
    for t in range(s):
        sl = model.relation_slice(t)
        for row in sl.vectors:
            if not sl.contains(outer_transpose(TensorElement(d, row, field)).coeffs):
                slice_ok = False

    skew_failures = 0
    checked = 0
    for i in range(s):
        for t in range(s):
            for j in range(s):
                checked += 1
                b = TensorElement.basis_element(d, i, t, j, field)
                if not space.contains((b - outer_transpose(b)).coeffs):
                    skew_failures += 1

    return [
        CheckResult("transpose.involution", involution_ok, {"basis_vectors": s ** 3}),
        CheckResult(
            "transpose.slice_invariance",
            invariant_ok and slice_ok,
            {"space_invariant": invariant_ok, "slices_invariant": slice_ok},
        ),
        CheckResult(
            "transpose.skew_in_relations",
            skew_failures == 0,
            {"basis_vectors": checked, "failures": skew_failures},
        ),
    ]


def check_complements(system: TDSystemData) -> list[CheckResult]:
    """Certify the complement bases of the relation space and its slices.

    Per slice: the two triangular power families plus the separated
    idempotent family span exactly the slice relations, and adding the
    diagonal idempotent family fills the whole slice.  The shifted
    idempotent family completes each slice basis.  Globally, the staircase
    family E_i (x) taustar_{j-i} (x) E_j over i <= j and the projector
    family E_i (x) Estar_0 (x) E_j over i <= j each fill the tensor space
    on top of the relation space with every member independent.
    """
    model = _model(system)
    d, field = system.d, system.field
    ambient = (d + 1) ** 3

    per_t = []
    families_ok = True
    for t in range(d + 1):
        low_right = [model.power_tensor(i, t, j, MiddleBasis.TAU_STAR)
                     for j in range(t) for i in range(d + 1)]
        low_left = [model.power_tensor(i, t, j, MiddleBasis.TAU_STAR)
                    for i in range(t) for j in range(t, d + 1)]
        separated = [model.idem_tensor(a, t, b, MiddleBasis.TAU_STAR)
                     for a in range(d + 1) for b in range(d + 1) if t < abs(a - b)]
        diagonal = [model.idem_tensor(a, t, a, MiddleBasis.TAU_STAR)
                    for a in range(d - t + 1)]
        sizes_ok = (
            len(low_right) == t * (d + 1)
            and len(low_left) == t * (d - t + 1)
            and len(separated) == (d - t) * (d - t + 1)
            and len(diagonal) == d - t + 1
        )
        span = SubspaceBasis(ambient, field)
        for v in low_right + low_left + separated:
            span.add(v.coeffs)
        matches_slice = span.vectors == model.relation_slice(t).vectors
        fills = all(span.add(v.coeffs) for v in diagonal) and span.dim == (d + 1) ** 2
        per_t.append({"t": t, "sizes_ok": sizes_ok, "spans_slice_relations": matches_slice,
                      "fills_slice": fills})
        families_ok = families_ok and sizes_ok and matches_slice and fills

    shifted_ok = True
    shifted_detail = []
    for t in range(d + 1):
        span = model.relation_slice(t).copy()
        grew = all(
            span.add(model.idem_tensor(i, t, i + t, MiddleBasis.TAU_STAR).coeffs)
            for i in range(d - t + 1)
        )
        ok = grew and span.dim == (d + 1) ** 2
        shifted_detail.append({"t": t, "independent": grew, "filled": ok})
        shifted_ok = shifted_ok and ok

    def global_fill(kind: MiddleBasis, middle_t) -> tuple[bool, dict]:
        span = model.relation_space.copy()
        base = span.dim
        count = 0
        independent = True
        for i in range(d + 1):
            for j in range(i, d + 1):
                count += 1
                vec = model.idem_tensor(i, middle_t(i, j), j, kind)
                if not span.add(vec.coeffs):
                    independent = False
        ok = independent and span.dim == ambient and count == (d + 1) * (d + 2) // 2
        return ok, {"family_size": count, "relation_dim": base, "filled_dim": span.dim,
                    "independent": independent}

    staircase_ok, staircase_info = global_fill(MiddleBasis.TAU_STAR, lambda i, j: j - i)
    projector_ok, projector_info = global_fill(MiddleBasis.PROJECTOR, lambda i, j: 0)

    return [
        CheckResult("complements.slice_families", families_ok, {"per_t": per_t}),
        CheckResult("complements.shifted", shifted_ok, {"per_t": shifted_detail}),
        CheckResult("complements.staircase", staircase_ok, staircase_info),
        CheckResult("complements.corner_middle", projector_ok, projector_info),
    ]


def shift_factor(system: TDSystemData, t: int, i: int, j: int) -> Polynomial:
    """The monic product of (x - theta_h) for h from i+1 to i+t, h != j;
    the coupling factor between diagonal and shifted idempotent tensors."""
    if not (0 <= i < j <= i + t <= system.d):
        raise ValueError("need 0 <= i < j <= i + t <= d")
    roots = [system.theta[h] for h in range(i + 1, i + t + 1) if h != j]
    return Polynomial.from_roots(system.field, roots)


def check_shift_triangularity(system: TDSystemData, t: int) -> bool:
    """Certify the triangular passage between shifted and diagonal
    idempotent tensors inside the degree-t slice.

    Membership: for all i < j <= i + t, both weighted combinations
    f(theta_i) E_i(x)tau(x)E_i + f(theta_j) E_i(x)tau(x)E_j and its outer
    swap lie in the slice relations plus the diagonal tensors below i.
    Triangularity: writing each shifted tensor in the diagonal basis modulo
    the slice relations gives an upper triangular coefficient matrix with
    nonzero diagonal.
    """
    if not 0 <= t <= system.d:
        raise ValueError(f"t out of range [0, {system.d}]")
    model = _model(system)
    d, field = system.d, system.field
    diag = [model.idem_tensor(h, t, h, MiddleBasis.TAU_STAR) for h in range(d + 1)]

    span = model.relation_slice(t).copy()
    for i in range(d - t + 1):
        for j in range(i + 1, i + t + 1):
            f = shift_factor(system, t, i, j)
            ci = f(system.theta[i])
            cj = f(system.theta[j])
            straight = diag[i].scale(ci) + model.idem_tensor(i, t, j, MiddleBasis.TAU_STAR).scale(cj)
            swapped = diag[i].scale(ci) + model.idem_tensor(j, t, i, MiddleBasis.TAU_STAR).scale(cj)
            if not span.contains(straight.coeffs) or not span.contains(swapped.coeffs):
                return False
        span.add(diag[i].coeffs)

    relations = model.relation_slice(t)
    residues = [relations.residue(diag[h].coeffs) for h in range(d - t + 1)]
    independent = SubspaceBasis((d + 1) ** 3, field)
    if not all(independent.add(r) for r in residues):
        return False
    for i in range(d - t + 1):
        shifted = model.idem_tensor(i, t, i + t, MiddleBasis.TAU_STAR)
        coeffs = solve_row_combination(residues, relations.residue(shifted.coeffs), field)
        if coeffs is None:
            return False
        if not coeffs[i]:
            return False
        if any(coeffs[h] for h in range(i + 1, d - t + 1)):
            return False
    return True


def corner_middle_scalar(system: TDSystemData, t: int):
    """Product of (thetastar_0 - thetastar_k) for k = 1..t; the factor that
    converts a taustar middle slot into a projector middle slot."""
    if not 0 <= t <= system.d:
        raise ValueError(f"t out of range [0, {system.d}]")
    field = system.field
    acc = field.one
    for k in range(1, t + 1):
        acc = field.mul(acc, field.sub(system.thetastar[0], system.thetastar[k]))
    return acc


def check_corner_middle_reduction(system: TDSystemData) -> bool:
    """Certify that each shifted tensor with a taustar middle slot agrees
    with its projector-middle counterpart, scaled by the corner middle
    scalar, modulo the relation space and all higher-degree slices.
    Checked for every degree t and offset i."""
    model = _model(system)
    d, field = system.d, system.field
    span = model.relation_space.copy()
    for t in range(d, -1, -1):
        scalar = corner_middle_scalar(system, t)
        for i in range(d - t + 1):
            lhs = model.idem_tensor(i, t, i + t, MiddleBasis.TAU_STAR)
            rhs = model.idem_tensor(i, 0, i + t, MiddleBasis.PROJECTOR).scale(scalar)
            if not span.contains((lhs - rhs).coeffs):
                return False
        if t:
            for a in range(d + 1):
                for b in range(d + 1):
                    span.add(model.power_tensor(a, t, b, MiddleBasis.TAU_STAR).coeffs)
    return True


# ---------------------------------------------------------------------------
# the main span certificate


@dataclass(frozen=True)
class MainTheoremCert:
    """Certificate that cornered mixed products collapse to cornered powers.

    dim_mixed_span is the dimension of span{Estar_0 A^i Astar^t A^j Estar_0};
    dim_corner_span that of span{Estar_0 A^i Estar_0 A^j Estar_0}.  `equal`
    records whether the two reduced bases coincide row for row, and
    commutator_max_rank is the largest rank among the pairwise commutators
    of the cornered powers (zero when they all commute).
    """

    dim_mixed_span: int
    dim_corner_span: int
    commutator_max_rank: int
    equal: bool


def certify_main_theorem(system: TDSystemData) -> MainTheoremCert:
    model = _model(system)
    d, n, field = system.d, system.n, system.field
    table = model.corner_table
    mixed = SubspaceBasis(n * n, field)
    for i in range(d + 1):
        for t in range(d + 1):
            for j in range(d + 1):
                mixed.add(table[i][t][j].entries)
    e0 = system.Estar[0]
    apow = [system.A.power(k) for k in range(d + 1)]
    cornered = [table[i][0][0] for i in range(d + 1)]
    corner_span = SubspaceBasis(n * n, field)
    products = {}
    for i in range(d + 1):
        for j in range(d + 1):
            products[(i, j)] = cornered[i] * apow[j] * e0
            corner_span.add(products[(i, j)].entries)
    max_rank = 0
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            commutator = products[(i, j)] - products[(j, i)]
            if not commutator.is_zero():
                max_rank = max(max_rank, rref(commutator).rank)
    return MainTheoremCert(
        dim_mixed_span=mixed.dim,
        dim_corner_span=corner_span.dim,
        commutator_max_rank=max_rank,
        equal=mixed == corner_span,
    )
