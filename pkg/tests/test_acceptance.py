"""Acceptance suite: the eight package-level criteria, one test each.

Each test prints its own PASS/FAIL line (visible under pytest -s and in
the CLI `verify` table, which runs the same checks).  Tolerances are
exact: integer equality for every dimension, byte equality for every
canonical text.
"""

from kacvmrt.verify import (
    GOLDEN,
    check_component_structure,
    check_contact_grading,
    check_dimension_formula,
    check_engine_selfchecks,
    check_exceptional_dimensions,
    check_folding,
    check_golden_tables,
    check_kac_markings,
    run_all,
)

MAX_RANK = 12


def _report(criterion, results):
    bad = [r for r in results if r.status == "FAIL"]
    status = "FAIL" if bad else "PASS"
    print(f"[{criterion}] {status}: {len(results)} checks"
          + (f" ({len(bad)} failing: {[r.name for r in bad]})" if bad else ""))
    assert not bad, [f"{r.name}: {r.detail}" for r in bad]


def test_criterion_1_golden_tables():
    """Every classification-table row at two ranks, >= 40 concrete cases;
    exact canonical-text equality, documented discrepancies as WARN."""
    results = check_golden_tables()
    assert len(GOLDEN) >= 40
    warns = [r for r in results if r.status == "WARN"]
    # the blank EIV cell plus the BI/DI quadric-index rows
    assert any("paper_gap" in r.detail for r in warns)
    assert sum("name_flag" in r.detail for r in warns) >= 4
    _report("criterion-1 golden tables", results)


def test_criterion_2_exceptional_dimensions():
    """Adjoint dims 5/15/21/33/57 and OG(2,2n+1) = 4n-5 for n = 2..8."""
    _report("criterion-2 exceptional dims", check_exceptional_dimensions())


def test_criterion_3_dimension_formula():
    """dim C = dim Z + boundary - 1 for every entry, and the independent
    ambient count dim(G/P_lambda) = dim Z + 1 in restricted type A."""
    _report("criterion-3 dimension formula", check_dimension_formula(MAX_RANK))


def test_criterion_4_folding():
    """fold_consistency across the four foldable families at restricted
    rank 2..10 plus the three displayed foldings."""
    _report("criterion-4 folding", check_folding())


def test_criterion_5_contact_gradation():
    """Depth-2 gradation with one-dimensional top for group type, rank <= 8
    (including the two-node A-type marking)."""
    _report("criterion-5 contact gradation", check_contact_grading(8))


def test_criterion_6_kac_marking_rules():
    """validate_kac_marking holds for every atlas entry; boundary degree 2
    exactly in restricted type A."""
    _report("criterion-6 kac markings", check_kac_markings(MAX_RANK))


def test_criterion_7_component_structure():
    """One diagram for group/simple, two for Hermitian exceptional, one
    sigma-paired diagram with isomorphic halves otherwise."""
    _report("criterion-7 components", check_component_structure(MAX_RANK))


def test_criterion_8_engine_selfchecks():
    """Lie-algebra dimension identities, Kac label null vectors, and the
    canonical-text round trip over every diagram the suite produces."""
    _report("criterion-8 self-checks", check_engine_selfchecks(MAX_RANK))


def test_full_suite_no_failures():
    results = run_all(MAX_RANK)
    fails = [r for r in results if r.status == "FAIL"]
    print(f"[acceptance] {len(results)} checks, {len(fails)} failures")
    assert not fails
