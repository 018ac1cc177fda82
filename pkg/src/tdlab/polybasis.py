"""Vanishing-polynomial families attached to a system's eigenvalue orderings.

For an eigenvalue ordering theta_0..theta_d, tau_i is the monic product of
(x - theta_h) over the first i eigenvalues and eta_i the same product over
the last i.  Evaluated at the operator they interpolate between the power
basis and the idempotent basis of the commutative algebra the operator
generates; the checks below certify the exchange identities this package
relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exactla import ExactMatrix, Polynomial, SubspaceBasis, matrices_span
from .report import CheckResult
from .tdcore import TDSystemData, d4_relative


@dataclass(frozen=True)
class PolyFamily:
    """tau/eta families for the unstarred ordering and their starred twins,
    each indexed 0..d and monic of degree equal to its index."""

    tau: tuple[Polynomial, ...]
    eta: tuple[Polynomial, ...]
    taustar: tuple[Polynomial, ...]
    etastar: tuple[Polynomial, ...]


def build_poly_family(system: TDSystemData) -> PolyFamily:
    field = system.field
    tau = tuple(Polynomial.from_roots(field, system.theta[:i]) for i in range(system.d + 1))
    eta = tuple(Polynomial.from_roots(field, system.theta[::-1][:i]) for i in range(system.d + 1))
    taustar = tuple(Polynomial.from_roots(field, system.thetastar[:i]) for i in range(system.d + 1))
    etastar = tuple(Polynomial.from_roots(field, system.thetastar[::-1][:i]) for i in range(system.d + 1))
    return PolyFamily(tau, eta, taustar, etastar)


def eval_at_matrix(poly: Polynomial, m: ExactMatrix) -> ExactMatrix:
    """Horner evaluation of a polynomial at a square matrix."""
    if not m.is_square:
        raise ValueError("polynomial evaluation needs a square matrix")
    acc = ExactMatrix.zeros(m.field, m.rows, m.cols)
    ident = ExactMatrix.identity(m.field, m.rows)
    for c in reversed(poly.coeffs):
        acc = acc * m + ident.scale(c)
    return acc


def check_idempotent_expansions(system: TDSystemData) -> CheckResult:
    """Certify the exchange identities between vanishing polynomials and
    idempotents, for every index i:

    - tau_i(A) equals the sum of tau_i(theta_j) E_j over j >= i,
    - eta_i(A) equals the sum of eta_i(theta_j) E_j over j <= d - i,
    - E_i is recovered from each of the two expansions above, and
    - E_i equals tau_i(A) eta_{d-i}(A) divided by its spectral weight,

    plus the polynomial identity tau_i * eta_{d-i} = sum over j >= i of
    eta_{d-j}(theta_i) tau_j that ties the two ladders together.
    """
    fam = build_poly_family(system)
    field = system.field
    d = system.d
    theta = system.theta
    zero = ExactMatrix.zeros(field, system.n, system.n)
    tau_at = [eval_at_matrix(fam.tau[i], system.A) for i in range(d + 1)]
    eta_at = [eval_at_matrix(fam.eta[i], system.A) for i in range(d + 1)]
    failures = []

    def weight(i: int):
        return field.mul(fam.tau[i](theta[i]), fam.eta[d - i](theta[i]))

    for i in range(d + 1):
        rhs = zero
        for j in range(i, d + 1):
            rhs = rhs + system.E[j].scale(fam.tau[i](theta[j]))
        if tau_at[i] != rhs:
            failures.append({"identity": "tau_on_spectrum", "i": i})

        rhs = zero
        for j in range(0, d - i + 1):
            rhs = rhs + system.E[j].scale(fam.eta[i](theta[j]))
        if eta_at[i] != rhs:
            failures.append({"identity": "eta_on_spectrum", "i": i})

        acc = zero
        for j in range(i, d + 1):
            acc = acc + tau_at[j].scale(fam.eta[d - j](theta[i]))
        if acc.scale(field.inv(weight(i))) != system.E[i]:
            failures.append({"identity": "idempotent_from_tau", "i": i})

        acc = zero
        for j in range(d - i, d + 1):
            acc = acc + eta_at[j].scale(fam.tau[d - j](theta[i]))
        if acc.scale(field.inv(weight(i))) != system.E[i]:
            failures.append({"identity": "idempotent_from_eta", "i": i})

        if (tau_at[i] * eta_at[d - i]).scale(field.inv(weight(i))) != system.E[i]:
            failures.append({"identity": "idempotent_product_form", "i": i})

        poly_rhs = Polynomial.zero(field)
        for j in range(i, d + 1):
            poly_rhs = poly_rhs + fam.tau[j].scale(fam.eta[d - j](theta[i]))
        if fam.tau[i] * fam.eta[d - i] != poly_rhs:
            failures.append({"identity": "ladder_exchange_poly", "i": i})

    return CheckResult(
        "poly.idempotent_expansions",
        not failures,
        {"indices": d + 1, "failures": failures},
    )


def _tau_filtration_failures(system: TDSystemData) -> list[dict]:
    fam = build_poly_family(system)
    d = system.d
    n2 = system.n * system.n
    apow = [system.A.power(k) for k in range(d + 1)]
    tau_at = [eval_at_matrix(fam.tau[i], system.A) for i in range(d + 1)]
    failures = []

    powers_up = SubspaceBasis(n2, system.field)
    taus_up = SubspaceBasis(n2, system.field)
    snapshots = []
    for i in range(d + 1):
        powers_up.add(apow[i].entries)
        taus_up.add(tau_at[i].entries)
        if powers_up.vectors != taus_up.vectors:
            failures.append({"claim": "low_powers_match_tau", "i": i})
        snapshots.append(powers_up.copy())

    idem_down = SubspaceBasis(n2, system.field)
    taus_down = SubspaceBasis(n2, system.field)
    for i in range(d, -1, -1):
        idem_down.add(system.E[i].entries)
        taus_down.add(tau_at[i].entries)
        if idem_down.vectors != taus_down.vectors:
            failures.append({"claim": "high_idempotents_match_tau", "i": i})
        union = snapshots[i].copy()
        union.add_all(e.entries for e in (system.E[j] for j in range(i, d + 1)))
        meet_dim = (i + 1) + (d - i + 1) - union.dim
        line_ok = (
            meet_dim == 1
            and not tau_at[i].is_zero()
            and snapshots[i].contains(tau_at[i].entries)
            and idem_down.contains(tau_at[i].entries)
        )
        if not line_ok:
            failures.append({"claim": "filtration_meet_is_tau_line", "i": i})
    return failures


def check_tau_filtration(system: TDSystemData) -> CheckResult:
    """Certify the tau filtration laws and their mirrors.

    For every i the low powers of A span the same space as the first tau
    evaluations, the idempotents from i upward span the same space as the
    tau evaluations from i upward, and the two filtrations meet in the line
    through tau_i(A).  The mirrored (eta) laws are the same claims on the
    relative with the unstarred ordering reversed.
    """
    failures = _tau_filtration_failures(system)
    mirrored = _tau_filtration_failures(d4_relative(system, "D"))
    for f in mirrored:
        failures.append({**f, "claim": "mirror_" + f["claim"]})
    return CheckResult(
        "poly.tau_filtration",
        not failures,
        {"indices": system.d + 1, "failures": failures},
    )


def check_basis_replacement(system: TDSystemData, delta, n: int) -> bool:
    """Replace any n+1 of the idempotents by the powers I, A, .., A^n and
    test that the result still spans the idempotent algebra."""
    chosen = sorted(set(delta))
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(chosen) != len(list(delta)):
        raise ValueError("replacement set contains duplicates")
    if len(chosen) != n + 1:
        raise ValueError("replacement set must have exactly n + 1 indices")
    if chosen and (chosen[0] < 0 or chosen[-1] > system.d):
        raise ValueError("replacement indices out of range")
    mats = [system.A.power(k) for k in range(n + 1)]
    mats.extend(system.E[i] for i in range(system.d + 1) if i not in set(chosen))
    return matrices_span(mats).dim == system.d + 1


def check_basis_replacement_exhaustive(system: TDSystemData) -> CheckResult:
    """Run the replacement test over every admissible choice: for each n,
    every subset of n + 1 idempotent indices swapped out for the powers."""
    checked = 0
    failures = []
    for n in range(system.d + 1):
        for delta in combinations(range(system.d + 1), n + 1):
            checked += 1
            if not check_basis_replacement(system, delta, n):
                failures.append({"n": n, "delta": list(delta)})
    return CheckResult(
        "poly.basis_replacement",
        not failures,
        {"checked": checked, "failures": failures},
    )
