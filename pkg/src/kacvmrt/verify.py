"""The verification sweep behind `kacvmrt verify` and the acceptance tests.

Eight checks: the golden catalogue rows (each classification-table row at
its smallest admissible rank and one larger one, transcribed by hand from
the classical tables into the canonical grammar), the exceptional dimension
spot values, the dimension identity dim C = dim Z + boundary - 1, the
folding round trips, the contact gradations, the white-node rules, the
component structure per kind, and the engine self-checks.

Rows carrying a documented discrepancy against the catalogue (the blank
EIV cell, the quadric-index naming of BI/DI) report WARN, never FAIL.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .affine import affine_diagram, kac_labels, validate_kac_marking
from .atlas import SymmetricSpaceEntry, enumerate_entries, lookup
from .diagrams import find_marked_isomorphism, marked, parabolic_dimension
from .engine import (
    contact_grading_check,
    fold,
    fold_consistency,
    vmrt,
    z_dimension,
    z_orbit_diagram,
)
from .render import parse, to_canonical_text
from .roots import CartanType, positive_roots


@dataclass(frozen=True)
class CheckResult:
    section: str
    name: str
    status: str  # PASS | FAIL | WARN
    detail: str = ""


@dataclass(frozen=True)
class GoldenRow:
    """One classification-table row instantiated at concrete parameters.

    texts/ident/dim transcribed by hand from the classical tables; `alias`
    records a catalogued name that differs from root counting (the row then
    reports WARN instead of comparing names).
    """

    label: str
    params: Dict[str, int]
    texts: Tuple[str, ...]
    ident: str
    dim: int
    table: str
    alias: Optional[str] = None  # catalogued name when flagged


# The golden catalogue.  Canonical texts derived by hand from the drawn
# diagrams under the package grammar (components sorted, automorphism-
# minimal orientation).
GOLDEN: Tuple[GoldenRow, ...] = (
    # --- restricted type A (VMRT table) -----------------------------------
    GoldenRow("group-A", {"n": 1}, ("o-x",), "P^2", 2, "typeA"),
    GoldenRow("group-A", {"n": 2}, ("o-x + o-x",), "P^2 x P^2", 4, "typeA"),
    GoldenRow("group-A", {"n": 5}, ("o-o-o-o-x + o-o-o-o-x",), "P^5 x P^5", 10, "typeA"),
    GoldenRow("herm-AI", {}, ("x",), "P^1", 1, "typeA"),
    GoldenRow("AI", {"n": 1}, ("o-x[2]",), "v_2(P^2)", 2, "typeA"),
    GoldenRow("AI", {"n": 3}, ("o-o-o-o-o-x[2]",), "v_2(P^6)", 6, "typeA"),
    GoldenRow("AI-even", {"n": 2}, ("o-o-x[2]",), "v_2(P^3)", 3, "typeA"),
    GoldenRow("AI-even", {"n": 4}, ("o-o-o-o-o-o-x[2]",), "v_2(P^7)", 7, "typeA"),
    GoldenRow("AII", {"n": 3}, ("o-o-o-x-o",), "Gr(2,6)", 8, "typeA"),
    GoldenRow("AII", {"n": 5}, ("o-o-o-o-o-o-o-x-o",), "Gr(2,10)", 16, "typeA"),
    GoldenRow("BII", {"n": 2}, ("o-o-x",), "P^3", 3, "typeA"),
    GoldenRow("BII", {"n": 4}, ("o-o-o-o-o-o-x",), "P^7", 7, "typeA"),
    GoldenRow("DII", {"n": 3}, ("o-o-o-x",), "P^4", 4, "typeA"),
    GoldenRow("DII", {"n": 5}, ("o-o-o-o-o-o-o-x",), "P^8", 8, "typeA"),
    GoldenRow("EIV", {}, ("o-o-o(o)-o-x",), "E_6/P_1", 16, "typeA"),
    # --- group type --------------------------------------------------------
    # B_2 = C_2: the adjoint orbit degree-2 annotation appears honestly,
    # giving v_2 of the spinor P^3 (the catalogue's C_2 row, nu_2(P^3)).
    GoldenRow("group-B", {"n": 2}, ("o=>x[2]",), "v_2(P^3)", 3, "group"),
    GoldenRow("group-B", {"n": 5}, ("o-x-o-o=>o",), "OG(2,11)", 15, "group"),
    GoldenRow("group-C", {"n": 3}, ("x[2]-o<=o",), "v_2(P^5)", 5, "group"),
    GoldenRow("group-C", {"n": 6}, ("x[2]-o-o-o-o<=o",), "v_2(P^11)", 11, "group"),
    GoldenRow("group-D", {"n": 4}, ("o-x(o)-o",), "OG(2,8)", 9, "group"),
    GoldenRow("group-D", {"n": 6}, ("o-x-o-o(o)-o",), "OG(2,12)", 17, "group"),
    GoldenRow("group-E", {"n": 6}, ("o-o-o(x)-o-o",), "E_6/P_2", 21, "group"),
    GoldenRow("group-E", {"n": 7}, ("x-o-o(o)-o-o-o",), "E_7/P_1", 33, "group"),
    GoldenRow("group-E", {"n": 8}, ("o-o-o(o)-o-o-o-x",), "E_8/P_8", 57, "group"),
    GoldenRow("group-F", {}, ("x-o=>o-o",), "F_4/P_1", 15, "group"),
    GoldenRow("group-G", {}, ("o<#x",), "G_2/P_2", 5, "group"),
    # --- simple type, restricted type not A --------------------------------
    GoldenRow("BI", {"n": 3, "m": 4}, ("x + x + x[2]",), "P^1 x P^1 x v_2(P^1)", 3,
              "simple", alias="Q_4 x Q_3"),
    GoldenRow("BI", {"n": 7, "m": 8}, ("o-o(o)-x + x-o=>o",), "Q_6 x Q_5", 11,
              "simple", alias="Q_8 x Q_7"),
    GoldenRow("CII", {"n": 2, "m": 1}, ("x + x",), "P^1 x P^1", 2, "simple"),
    GoldenRow("CII", {"n": 4, "m": 1}, ("x + x-o<=o",), "P^5 x P^1", 6, "simple"),
    GoldenRow("CII", {"n": 5, "m": 2}, ("o=>x + x-o<=o",), "P^5 x P^3", 8, "simple"),
    GoldenRow("DI-odd", {"n": 4, "m": 1}, ("x=>o + x[2]",), "Q_3 x v_2(P^1)", 4,
              "simple", alias="Q_3 x Q_5"),
    GoldenRow("DI-odd", {"n": 6, "m": 2}, ("x-o=>o + x=>o",), "Q_5 x Q_3", 8,
              "simple", alias="Q_5 x Q_7"),
    GoldenRow("DI-even", {"n": 4, "m": 2}, ("x + x + x + x",), "P^1 x P^1 x P^1 x P^1", 4,
              "simple", alias="Q_4 x Q_4"),
    GoldenRow("DI-even", {"n": 6, "m": 2}, ("o-o(o)-x + x + x",), "Q_6 x P^1 x P^1", 8,
              "simple", alias="Q_4 x Q_8"),
    GoldenRow("EI", {}, ("o-o-o<=x",), "LG(4,8)", 10, "simple"),
    GoldenRow("EII", {}, ("o-o-x-o-o + x",), "Gr(3,6) x P^1", 10, "simple"),
    GoldenRow("EV", {}, ("o-o-o-x-o-o-o",), "Gr(4,8)", 16, "simple"),
    GoldenRow("EVI", {}, ("o-o-o-o(o)-x + x",), "OG(6,12) x P^1", 16, "simple"),
    GoldenRow("EVIII", {}, ("o-o-o-o-o-o(o)-x",), "OG(8,16)", 28, "simple"),
    GoldenRow("EIX", {}, ("o-o-o(o)-o-o-x + x",), "E_7/P_7 x P^1", 28, "simple"),
    GoldenRow("FI", {}, ("o-o<=x + x",), "LG(3,6) x P^1", 7, "simple"),
    GoldenRow("FII", {}, ("o-o-o=>x",), "OG(4,9)", 10, "simple"),
    GoldenRow("G", {}, ("x + x[3]",), "P^1 x v_3(P^1)", 2, "simple"),
    # --- Hermitian type ----------------------------------------------------
    GoldenRow("herm-AIII", {"n": 3, "m": 1}, ("x", "x"), "P^1 u P^1", 1, "hermitian"),
    GoldenRow("herm-AIII", {"n": 7, "m": 2}, ("o-o-o-x + x", "o-o-o-x + x"),
              "P^4 x P^1 u P^4 x P^1", 5, "hermitian"),
    GoldenRow("herm-DIII-odd", {"n": 2}, ("o-o-x-o", "o-o-x-o"),
              "Gr(2,5) u Gr(3,5)", 6, "hermitian"),
    GoldenRow("herm-DIII-odd", {"n": 3}, ("o-o-o-o-x-o", "o-o-o-o-x-o"),
              "Gr(2,7) u Gr(5,7)", 10, "hermitian"),
    GoldenRow("herm-EIII", {}, ("o-o-o(o)-x", "o-o-o(o)-x"),
              "OG(5,10) u OG(5,10)", 10, "hermitian"),
    GoldenRow("herm-AIII", {"n": 4, "m": 2}, ("x + x + x + x ~sigma",),
              "P^1 x P^1 u P^1 x P^1", 2, "hermitian"),
    GoldenRow("herm-AIII", {"n": 8, "m": 4},
              ("o-o-x + o-o-x + o-o-x + o-o-x ~sigma",),
              "P^3 x P^3 u P^3 x P^3", 6, "hermitian"),
    GoldenRow("herm-BI", {"n": 3}, ("x=>o + x=>o ~sigma",), "Q_3 u Q_3", 3, "hermitian"),
    GoldenRow("herm-BI", {"n": 5}, ("x-o-o=>o + x-o-o=>o ~sigma",), "Q_7 u Q_7", 7,
              "hermitian"),
    GoldenRow("herm-CI", {"n": 2}, ("x[2] + x[2] ~sigma",), "v_2(P^1) u v_2(P^1)", 1,
              "hermitian"),
    GoldenRow("herm-CI", {"n": 4}, ("o-o-x[2] + o-o-x[2] ~sigma",),
              "v_2(P^3) u v_2(P^3)", 3, "hermitian"),
    GoldenRow("herm-DI", {"n": 5}, ("o-o(o)-x + o-o(o)-x ~sigma",), "Q_6 u Q_6", 6,
              "hermitian"),
    GoldenRow("herm-DI", {"n": 7}, ("x-o-o-o(o)-o + x-o-o-o(o)-o ~sigma",),
              "Q_10 u Q_10", 10, "hermitian"),
    GoldenRow("herm-DIII-even", {"n": 2}, ("o-x-o + o-x-o ~sigma",),
              "Gr(2,4) u Gr(2,4)", 4, "hermitian"),
    GoldenRow("herm-DIII-even", {"n": 3}, ("o-o-o-x-o + o-o-o-x-o ~sigma",),
              "Gr(2,6) u Gr(4,6)", 8, "hermitian"),
    GoldenRow("herm-EVII", {}, ("o-o-o(o)-o-x + o-o-o(o)-o-x ~sigma",),
              "E_6/P_1 u E_6/P_6", 16, "hermitian"),
)


def _entry_flags(e: SymmetricSpaceEntry) -> Tuple[str, ...]:
    return tuple(n.split(":", 1)[0] for n in e.notes)


def check_golden_tables() -> List[CheckResult]:
    out: List[CheckResult] = []
    for row in GOLDEN:
        e = lookup(row.label, row.params)
        v = vmrt(e)
        got_texts = tuple(to_canonical_text(c) for c in v.components)
        problems = []
        if got_texts != row.texts:
            problems.append(f"diagram {got_texts} != {row.texts}")
        if v.identification != row.ident:
            problems.append(f"name {v.identification!r} != {row.ident!r}")
        if v.dimension != row.dim:
            problems.append(f"dim {v.dimension} != {row.dim}")
        flags = _entry_flags(e)
        if problems:
            out.append(CheckResult("golden", e.name, "FAIL", "; ".join(problems)))
        elif flags:
            alias = f"; catalogued name {row.alias!r}" if row.alias else ""
            out.append(CheckResult("golden", e.name, "WARN", ", ".join(flags) + alias))
        else:
            out.append(CheckResult("golden", e.name, "PASS", v.identification))
    return out


_EXCEPTIONAL_DIMS = {"group-G": 5, "group-F": 15}
_EXCEPTIONAL_E = {6: 21, 7: 33, 8: 57}


def check_exceptional_dimensions() -> List[CheckResult]:
    out = []
    for label, want in sorted(_EXCEPTIONAL_DIMS.items()):
        got = vmrt(lookup(label)).dimension
        status = "PASS" if got == want else "FAIL"
        out.append(CheckResult("dims", f"{label} adjoint dim", status, f"{got} (want {want})"))
    for n, want in sorted(_EXCEPTIONAL_E.items()):
        got = vmrt(lookup("group-E", {"n": n})).dimension
        status = "PASS" if got == want else "FAIL"
        out.append(CheckResult("dims", f"group-E{n} adjoint dim", status, f"{got} (want {want})"))
    for n in range(2, 9):
        got = vmrt(lookup("group-B", {"n": n})).dimension
        want = 4 * n - 5
        status = "PASS" if got == want else "FAIL"
        out.append(CheckResult("dims", f"OG(2,{2 * n + 1}) dim", status, f"{got} (want {want})"))
    return out


def check_dimension_formula(max_rank: int) -> List[CheckResult]:
    out = []
    bad = []
    count = 0
    for e in enumerate_entries(max_rank):
        zs = z_orbit_diagram(e.kac_diagram(), e.kind)
        zdim = z_dimension(zs[0])
        v = vmrt(e)
        count += 1
        if v.dimension != zdim + e.boundary_degree - 1:
            bad.append(f"{e.name}: {v.dimension} != {zdim}+{e.boundary_degree}-1")
        if e.restricted.is_type_a and e.restricted.rank >= 2:
            gp = v.components[0]
            gp_dim = parabolic_dimension(gp.diagram, gp.crossed)
            if gp_dim != zdim + 1:
                bad.append(f"{e.name}: ambient {gp_dim} != z+1 = {zdim + 1}")
    status = "PASS" if not bad else "FAIL"
    out.append(CheckResult("dimension-formula", f"{count} entries, rank <= {max_rank}",
                           status, "; ".join(bad[:4])))
    return out


def check_folding() -> List[CheckResult]:
    out = []
    cases: List[Tuple[str, Dict[str, int]]] = []
    cases += [("group-A", {"n": r}) for r in range(2, 11)]
    cases += [("AI", {"n": n}) for n in range(1, 6)]        # restricted A_2..A_10, even
    cases += [("AII", {"n": n}) for n in range(3, 12)]      # restricted A_2..A_10
    cases.append(("EIV", {}))
    bad = []
    for label, params in cases:
        e = lookup(label, params)
        if not fold_consistency(e):
            bad.append(e.name)
    out.append(CheckResult("folding", f"{len(cases)} foldable entries",
                           "PASS" if not bad else "FAIL", "; ".join(bad)))

    # The three classical folding instances.  The first is traditionally
    # captioned nu_2(P^9) -> Q_8, one rank below the drawn diagrams (ten
    # nodes folding onto five): the drawn instance is nu_2(P^10) -> nu_2(Q_9).
    displays = [
        ("AI", {"n": 5}, "ab", "x[2]-o-o-o=>o", "nu_2(P^10) -> nu_2(Q_9)"),
        ("AII", {"n": 5}, "ac", "o-x-o-o<=o", "Gr(2,10) -> IG(2,10)"),
        ("EIV", {}, "ef", "o-o=>o-x", "E_6/P_6 -> F_4/P_4"),
    ]
    for label, params, pair, want, note in displays:
        e = lookup(label, params)
        folded = fold(vmrt(e).components[0], pair)
        got = to_canonical_text(folded)
        z = z_orbit_diagram(e.kac_diagram(), e.kind)[0]
        ok = got == want and got == to_canonical_text(z)
        out.append(CheckResult("folding", f"displayed folding {note}",
                               "PASS" if ok else "FAIL", got))
    return out


def check_contact_grading(max_rank: int = 8) -> List[CheckResult]:
    bad = []
    count = 0
    for e in enumerate_entries(max_rank):
        if e.kind != "group" or e.kac_base.rank > max_rank:
            continue
        if e.kac_base == CartanType("A", 1):
            # sl_2 carries no depth-2 gradation; the contact statement
            # explicitly excludes PGL_2.
            continue
        count += 1
        if not contact_grading_check(e):
            bad.append(e.name)
    return [CheckResult("contact", f"{count} group entries, rank <= {max_rank}",
                        "PASS" if not bad else "FAIL", "; ".join(bad))]


def check_kac_markings(max_rank: int) -> List[CheckResult]:
    bad = []
    entries = enumerate_entries(max_rank)
    for e in entries:
        if not validate_kac_marking(e.kac_diagram(), e.kind):
            bad.append(e.name)
        if (e.boundary_degree == 2) != e.restricted.is_type_a:
            bad.append(f"{e.name} boundary/type-A mismatch")
    return [CheckResult("kac-rules", f"{len(entries)} entries",
                        "PASS" if not bad else "FAIL", "; ".join(bad))]


def check_component_structure(max_rank: int) -> List[CheckResult]:
    bad = []
    count = 0
    for e in enumerate_entries(max_rank):
        count += 1
        zs = z_orbit_diagram(e.kac_diagram(), e.kind)
        if e.kind in ("group", "simple"):
            if len(zs) != 1 or zs[0].sigma_pairs is not None:
                bad.append(e.name)
        elif e.kind == "hermitian-exceptional":
            if len(zs) != 2 or find_marked_isomorphism(zs[0], zs[1]) is None:
                bad.append(e.name)
        else:
            if len(zs) != 1 or zs[0].sigma_pairs is None:
                bad.append(e.name)
                continue
            z = zs[0]
            left = z.sigma_left_nodes()
            right = frozenset(z.diagram.nodes) - left
            lm = marked(z.diagram.restrict(left), z.crossed & left,
                        tuple((k, v) for k, v in z.annotations if k in left))
            rm = marked(z.diagram.restrict(right), z.crossed & right,
                        tuple((k, v) for k, v in z.annotations if k in right))
            if find_marked_isomorphism(lm, rm) is None:
                bad.append(e.name)
    return [CheckResult("components", f"{count} entries",
                        "PASS" if not bad else "FAIL", "; ".join(bad))]


def check_engine_selfchecks(max_rank: int) -> List[CheckResult]:
    out = []
    bad = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for r in range(lo, max_rank + 1):
            t = CartanType(fam, r)
            if 2 * len(positive_roots(t)) + r != t.algebra_dimension:
                bad.append(str(t))
    for t in (CartanType("E", 6), CartanType("E", 7), CartanType("E", 8),
              CartanType("F", 4), CartanType("G", 2)):
        if 2 * len(positive_roots(t)) + t.rank != t.algebra_dimension:
            bad.append(str(t))
    out.append(CheckResult("self-checks", f"Lie dimension identities rank <= {max_rank}",
                           "PASS" if not bad else "FAIL", "; ".join(bad)))

    bad = []
    seen = set()
    for e in enumerate_entries(max_rank):
        key = (e.kac_base, e.kac_twist)
        if key in seen:
            continue
        seen.add(key)
        try:
            kac_labels(affine_diagram(*key))
        except AssertionError as ex:
            bad.append(f"{key}: {ex}")
    out.append(CheckResult("self-checks", f"Kac label null vectors ({len(seen)} diagrams)",
                           "PASS" if not bad else "FAIL", "; ".join(bad)))

    bad = []
    count = 0
    for e in enumerate_entries(max_rank):
        diagrams = [e.kac_diagram()]
        diagrams += list(z_orbit_diagram(e.kac_diagram(), e.kind))
        diagrams += list(vmrt(e).components)
        for d in diagrams:
            count += 1
            text = to_canonical_text(d)
            if to_canonical_text(parse(text)) != text:
                bad.append(f"{e.name}: {text!r}")
    out.append(CheckResult("self-checks", f"canonical round trip ({count} diagrams)",
                           "PASS" if not bad else "FAIL", "; ".join(bad[:3])))
    return out


def run_all(max_rank: int = 12) -> List[CheckResult]:
    results: List[CheckResult] = []
    results += check_golden_tables()
    results += check_exceptional_dimensions()
    results += check_dimension_formula(max_rank)
    results += check_folding()
    results += check_contact_grading(min(max_rank, 8))
    results += check_kac_markings(max_rank)
    results += check_component_structure(max_rank)
    results += check_engine_selfchecks(max_rank)
    return results


def format_results(results: Sequence[CheckResult]) -> str:
    lines = []
    width = max(len(f"{r.section}: {r.name}") for r in results)
    for r in results:
        head = f"{r.section}: {r.name}"
        lines.append(f"{head:<{width}}  {r.status:4s}  {r.detail}".rstrip())
    n_fail = sum(1 for r in results if r.status == "FAIL")
    n_warn = sum(1 for r in results if r.status == "WARN")
    lines.append(f"{len(results)} checks: {len(results) - n_fail - n_warn} passed, "
                 f"{n_warn} warnings, {n_fail} failures")
    return "\n".join(lines)
