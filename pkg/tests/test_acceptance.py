"""Acceptance gate: the full certificate battery over the bundled corpus.

Each test is one acceptance criterion, runs at exact arithmetic (zero
tolerance), and prints a single [PASS]/[FAIL] line.  Run with `pytest -s`
to see the lines."""

from tdlab.catalog import document_system, fixture_corpus
from tdlab.polybasis import (
    check_basis_replacement_exhaustive,
    check_idempotent_expansions,
    check_tau_filtration,
)
from tdlab.tdcore import (
    D4Element,
    check_super_tridiagonal,
    d4_relative,
    idempotent_algebra_check,
    orderings_check,
    probe_corner_generation,
    relators_check,
)
from tdlab.tensorspace import (
    certify_main_theorem,
    check_complements,
    check_corner_middle_reduction,
    check_dimension_laws,
    check_kernel,
    check_shift_triangularity,
    check_transpose_properties,
)

SYSTEMS = [(doc.label, document_system(doc)) for doc in fixture_corpus()]


def _conclude(number, description, problems):
    status = "PASS" if not problems else "FAIL"
    print(f"[{status}] criterion {number}: {description}")
    assert not problems, problems


def test_criterion_1_dimension_laws():
    problems = []
    anchors = {}
    for label, system in SYSTEMS:
        slices, total, grading = check_dimension_laws(system)
        for result in (slices, total, grading):
            if not result.passed:
                problems.append((label, result.check, result.details))
        anchors[system.d] = (total.details["dim"], total.details["codim"])
    if anchors.get(2) != (21, 6):
        problems.append(("anchor d=2", anchors.get(2)))
    if anchors.get(4) != (110, 15):
        problems.append(("anchor d=4", anchors.get(4)))
    _conclude(1, "relation space dimensions d^2+d+t per slice, "
                 "d(d+1)(2d+3)/2 total, on all 13 fixtures", problems)


def test_criterion_2_kernel_containment():
    problems = []
    for label, system in SYSTEMS:
        result = check_kernel(system)
        if not result.passed:
            problems.append((label, result.details))
    _conclude(2, "corner map exactly annihilates every relation basis vector",
              problems)


def test_criterion_3_main_theorem_all_relatives():
    problems = []
    for label, system in SYSTEMS:
        for g in D4Element.all_elements():
            cert = certify_main_theorem(d4_relative(system, g))
            if not cert.equal or cert.commutator_max_rank != 0:
                problems.append((label, g.display, cert))
    _conclude(3, "corner span equality and commuting cornered powers "
                 "on all 8 relatives of every fixture", problems)


def test_criterion_4_complement_bases():
    problems = []
    for label, system in SYSTEMS:
        for result in check_complements(system):
            if not result.passed:
                problems.append((label, result.check, result.details))
    _conclude(4, "slice complement families, shifted, staircase, and "
                 "projector-middle bases all fill exactly", problems)


def test_criterion_5_transpose_map():
    problems = []
    for label, system in SYSTEMS:
        for result in check_transpose_properties(system):
            if not result.passed:
                problems.append((label, result.check, result.details))
    _conclude(5, "outer transpose: involution, slice invariance, and "
                 "skew parts inside relations, exhaustively", problems)


def test_criterion_6_super_tridiagonality():
    problems = []
    for label, system in SYSTEMS:
        result = check_super_tridiagonal(system)
        if not result.passed:
            problems.append((label, result.details))
    _conclude(6, "idempotent-power-idempotent products vanish below the "
                 "index gap in both dualities", problems)


def test_criterion_7_structural_invariants():
    problems = []
    for label, system in SYSTEMS:
        for result in (idempotent_algebra_check(system),
                       orderings_check(system),
                       relators_check(system)):
            if not result.passed:
                problems.append((label, result.check, result.details))
    _conclude(7, "idempotent algebra laws, exactly one reversed ordering "
                 "pair, and symmetry relators acting as identity", problems)


def test_criterion_8_supporting_certificates():
    problems = []
    for label, system in SYSTEMS:
        for result in (check_idempotent_expansions(system),
                       check_tau_filtration(system),
                       check_basis_replacement_exhaustive(system)):
            if not result.passed:
                problems.append((label, result.check, result.details))
        for t in range(system.d + 1):
            if not check_shift_triangularity(system, t):
                problems.append((label, "triangularity", t))
        if not check_corner_middle_reduction(system):
            problems.append((label, "corner middle reduction"))
    _conclude(8, "expansion, filtration, basis replacement (all subsets), "
                 "triangularity, and reduction certificates", problems)


def test_criterion_9_conjecture_probe():
    problems = []
    generated_count = 0
    for label, system in SYSTEMS:
        probe = probe_corner_generation(system)
        if not (1 <= probe.generated_dim <= probe.corner_dim
                <= probe.wordspan_dim == system.n * system.n):
            problems.append((label, probe))
        if probe.generated != (probe.generated_dim == probe.corner_dim):
            problems.append((label, "inconsistent flag", probe))
        generated_count += probe.generated
    _conclude(9, f"corner generation probe ran on all {len(SYSTEMS)} fixtures "
                 f"(generated on {generated_count}/{len(SYSTEMS)})", problems)
