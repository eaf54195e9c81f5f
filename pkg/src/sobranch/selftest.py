"""Golden-vector execution and exhaustive invariant sweeps.

Every check is deterministic and exact; a check either passes or reports
each offending input on its own failure line.  The golden vectors live
in ``data/golden_vectors.jsonl``, one JSON object per line with the
operation, its arguments, the expected output, and a provenance tag.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources

from . import branching, gross_prasad, irreps, multiplicity, principal_series, render
from .scalars import GENERIC, Sign, exact, parse_scalar


@dataclass
class CheckReport:
    name: str
    passed: bool
    summary: str
    failures: list[str] = field(default_factory=list)


def default_vectors_path():
    return resources.files("sobranch").joinpath("data/golden_vectors.jsonl")


# ---------------------------------------------------------------------------
# golden vector dispatch

def _sign(text):
    return Sign.parse(text)


def _op_mult(args):
    result = multiplicity.principal_series_multiplicity(
        args["n"], args["i"], parse_scalar(args["lam"]), _sign(args["delta"]),
        args["j"], parse_scalar(args["nu"]), _sign(args["epsilon"]),
    )
    return {"value": result.value, "case": result.case_label}


def _op_in_lattice(args):
    point = multiplicity.LatticePoint(
        parse_scalar(args["lam"]), parse_scalar(args["nu"]), _sign(args["gamma"])
    )
    return multiplicity.in_exceptional_lattice(point)


def _op_in_lattice_punctured(args):
    point = multiplicity.LatticePoint(
        parse_scalar(args["lam"]), parse_scalar(args["nu"]), _sign(args["gamma"])
    )
    return multiplicity.in_punctured_exceptional_lattice(point)


def _op_infchar(args):
    entries = principal_series.infinitesimal_character(
        args["n"], args["i"], parse_scalar(args["lam"])
    )
    return render.infchar_json(entries)


def _op_rho(args):
    return render.infchar_json(principal_series.rho_vector(args["n"]))


def _op_has_rho(args):
    return principal_series.has_rho_infchar(args["n"], args["i"], parse_scalar(args["lam"]))


def _op_normalize_degree(args):
    return principal_series.normalize_degree(args["n"], args["i"])


def _op_canonical(args):
    r = irreps.canonical_irrep(args["n"], args["ell"], _sign(args["sign"]))
    return {"ell": r.ell, "sign": str(r.sign)}


def _op_subquotient(args):
    r = irreps.principal_series_subquotient(
        args["n"], args["i"], _sign(args["delta"]), args["part"]
    )
    return {"ell": r.ell, "sign": str(r.sign)}


def _op_irreps_count(args):
    return len(irreps.irreps_with_rho(args["n"]))


def _op_classify(args):
    r = irreps.IrrepRho(args["n"], args["ell"], _sign(args["sign"]))
    return str(irreps.classify_irrep(r))


def _op_central(args):
    r = irreps.IrrepRho(args["n"], args["ell"], _sign(args["sign"]))
    return irreps.central_character_nontrivial(r)


def _op_levi(args):
    return [[g.p, g.q] for g in irreps.levi_factors(args["n"], args["i"])]


def _op_nilrho(args):
    return render.infchar_json(irreps.half_sum_nilradical_roots(args["n"], args["i"]))


def _op_theta(args):
    r = irreps.IrrepRho(args["n"], args["ell"], _sign(args["sign"]))
    return render.theta_json(irreps.theta_stable_parameter(r))


def _op_hom(args):
    return branching.hom_dim(
        args["n"], args["i"], _sign(args["delta"]), args["j"], _sign(args["epsilon"])
    )


def _op_graph_counts(args):
    graph = branching.branching_graph(args["n"])
    return [len(graph.nodes_big), len(graph.nodes_small), len(graph.edges)]


def _op_theta_arrow(args):
    pair = branching.theta_arrow(
        args["n"], args["i"], _sign(args["delta"]), args["j"], _sign(args["epsilon"])
    )
    if pair is None:
        return None
    return {"big": render.theta_json(pair[0]), "small": render.theta_json(pair[1])}


def _op_packet(args):
    packet = gross_prasad.vogan_packet(args["kind"], args["m"])
    return {
        "total": packet.total,
        "rank": packet.character_group_rank,
        "members": [[mem.form.p, mem.form.q, mem.count] for mem in packet.members],
    }


def _op_gp_coeffs(args):
    coeffs = gross_prasad.langlands_coefficients(args["conjecture"], args["m"])
    return {
        "first": [str(c) for c in coeffs.first],
        "second": [str(c) for c in coeffs.second],
    }


def _op_gp_chi(args):
    first, second = gross_prasad.gp_characters(args["conjecture"], args["m"])
    return {"first": [str(s) for s in first], "second": [str(s) for s in second]}


def _op_gp_resolve(args):
    res = gross_prasad.gp_resolution(args["conjecture"], args["m"], args["profile"])
    return {
        "p": res.p,
        "q": res.q,
        "forms": [[f.p, f.q] for f in res.forms],
        "warning": res.warning is not None,
    }


def _op_gp_pair(args):
    pair = gross_prasad.gp_distinguished_pair(args["conjecture"], args["m"])
    return {
        "first": render.irrep_json(pair.first),
        "second": render.irrep_json(pair.second),
        "hom": pair.hom_dim,
    }


_OPS = {
    "mult": _op_mult,
    "in_lattice": _op_in_lattice,
    "in_lattice_punctured": _op_in_lattice_punctured,
    "infchar": _op_infchar,
    "rho": _op_rho,
    "has_rho": _op_has_rho,
    "normalize_degree": _op_normalize_degree,
    "canonical": _op_canonical,
    "subquotient": _op_subquotient,
    "irreps_count": _op_irreps_count,
    "classify": _op_classify,
    "central": _op_central,
    "levi": _op_levi,
    "nilrho": _op_nilrho,
    "theta": _op_theta,
    "hom": _op_hom,
    "graph_counts": _op_graph_counts,
    "theta_arrow": _op_theta_arrow,
    "packet": _op_packet,
    "gp_coeffs": _op_gp_coeffs,
    "gp_chi": _op_gp_chi,
    "gp_resolve": _op_gp_resolve,
    "gp_pair": _op_gp_pair,
}


def load_vectors(path=None) -> list[dict]:
    source = path if path is not None else default_vectors_path()
    try:
        text = source.read_text()
    except (OSError, FileNotFoundError) as err:
        raise FileNotFoundError(f"golden vector file unavailable: {err}") from err
    vectors = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as err:
            raise ValueError(
                f"corrupt golden vector file at line {line_number}: {err}"
            ) from err
        for key in ("op", "args", "expect"):
            if key not in record:
                raise ValueError(
                    f"corrupt golden vector file at line {line_number}: missing {key!r}"
                )
        vectors.append(record)
    return vectors


def check_golden_vectors(path=None) -> CheckReport:
    vectors = load_vectors(path)
    failures = []
    for idx, record in enumerate(vectors, start=1):
        op = record["op"]
        runner = _OPS.get(op)
        if runner is None:
            failures.append(f"vector {idx}: unknown op {op!r}")
            continue
        try:
            actual = runner(record["args"])
        except Exception as err:  # report, never abort the run
            failures.append(f"vector {idx} ({op}): raised {type(err).__name__}: {err}")
            continue
        if actual != record["expect"]:
            detail = f"vector {idx} ({op}): expected {record['expect']!r}, got {actual!r}"
            if op == "mult" and isinstance(actual, dict):
                detail += f" (case {actual['case']})"
            failures.append(detail)
    return CheckReport(
        "golden-vectors",
        not failures,
        f"{len(vectors)} vectors",
        failures,
    )


# ---------------------------------------------------------------------------
# invariant sweeps

def _scalar_palette(n: int):
    return [exact(v) for v in range(-6, n + 3)] + [GENERIC]


def check_multiplicity_sweeps() -> list[CheckReport]:
    """Full-range sweep of the multiplicity table for n in 3..10:
    value containment in the support sets, dependence on the signs only
    through their product, exhaustive case coverage, and the bound
    m <= 1 for non-integral parameters away from the split degrees."""
    support_failures = []
    sign_failures = []
    multone_failures = []
    seen_cases = set()
    for n in range(3, 11):
        palette = _scalar_palette(n)
        for i in range(n // 2 + 1):
            for j in range((n - 1) // 2 + 1):
                support = multiplicity.multiplicity_support(n, i, j)
                for lam in palette:
                    for nu in palette:
                        for gamma in (Sign.PLUS, Sign.MINUS):
                            res = multiplicity.principal_series_multiplicity(
                                n, i, lam, Sign.PLUS, j, nu, gamma
                            )
                            seen_cases.add(res.case_label)
                            if res.value not in support:
                                support_failures.append(
                                    f"n={n} i={i} j={j} lam={lam} nu={nu} "
                                    f"gamma={gamma}: {res.value} not in {sorted(support)}"
                                )
                            flipped = multiplicity.principal_series_multiplicity(
                                n, i, lam, Sign.MINUS, j, nu, -gamma
                            )
                            if flipped != res:
                                sign_failures.append(
                                    f"n={n} i={i} j={j} lam={lam} nu={nu}: "
                                    f"sign product not respected"
                                )
                            nonintegral = lam is GENERIC and nu is GENERIC
                            if (
                                nonintegral
                                and n != 2 * i
                                and n != 2 * j + 1
                                and res.value > 1
                            ):
                                multone_failures.append(
                                    f"n={n} i={i} j={j}: generic value {res.value} > 1"
                                )
    missing = set(multiplicity.case_labels()) - seen_cases
    coverage_failures = [f"case {label} never dispatched" for label in sorted(missing)]
    return [
        CheckReport(
            "mult-support-sweep",
            not support_failures,
            "n in 3..10, lam/nu in -6..n+2 and generic",
            support_failures,
        ),
        CheckReport(
            "mult-sign-dependence",
            not sign_failures,
            "delta*epsilon determines the value",
            sign_failures,
        ),
        CheckReport(
            "mult-case-coverage",
            not coverage_failures,
            f"{len(seen_cases)}/{len(multiplicity.case_labels())} cases hit",
            coverage_failures,
        ),
        CheckReport(
            "multiplicity-one",
            not multone_failures,
            "nonintegral parameters off the split degrees",
            multone_failures,
        ),
    ]


def check_classification() -> CheckReport:
    """Size, distinctness, and canonicalization coherence of the
    rho-family for n in 1..12, plus the hand-listed central characters
    at n = 4."""
    failures = []
    for n in range(1, 13):
        family = irreps.irreps_with_rho(n)
        if len(family) != n + 2:
            failures.append(f"n={n}: family size {len(family)} != {n + 2}")
        if len(set(family)) != len(family):
            failures.append(f"n={n}: duplicate canonical irreps")
        for r in family:
            if not r.canonical:
                failures.append(f"n={n}: {r} not canonical")
        for ell in range(n + 2):
            for sign in (Sign.PLUS, Sign.MINUS):
                canon = irreps.canonical_irrep(n, ell, sign)
                again = irreps.canonical_irrep(canon.n, canon.ell, canon.sign)
                if again != canon:
                    failures.append(f"n={n} ell={ell} {sign}: not idempotent")
                folded = irreps.canonical_irrep(n, n + 1 - ell, -sign)
                if folded != canon:
                    failures.append(f"n={n} ell={ell} {sign}: fold mismatch")
        kinds = [irreps.classify_irrep(r) for r in family]
        ds = kinds.count(irreps.Classification.DISCRETE_SERIES)
        tp = kinds.count(irreps.Classification.TEMPERED_PRINCIPAL)
        if n % 2 == 1 and ds != 1:
            failures.append(f"n={n}: {ds} discrete series, expected 1")
        if n % 2 == 0 and tp != 2:
            failures.append(f"n={n}: {tp} tempered principal, expected 2")
    expected_central = {
        (0, Sign.PLUS): False,
        (0, Sign.MINUS): True,
        (1, Sign.PLUS): True,
        (1, Sign.MINUS): False,
        (2, Sign.PLUS): False,
        (2, Sign.MINUS): True,
    }
    for (ell, sign), expected in expected_central.items():
        actual = irreps.central_character_nontrivial(irreps.IrrepRho(4, ell, sign))
        if actual != expected:
            failures.append(f"n=4 ell={ell} {sign}: central {actual} != {expected}")
    return CheckReport("classification", not failures, "n in 1..12", failures)


def _hom_rule_oracle(n, i, delta, j, epsilon):
    # Direct restatement on the stated index ranges, no canonicalization.
    identified_big = n % 2 == 1 and 2 * i == n + 1
    identified_small = n % 2 == 0 and 2 * j == n
    signs_ok = identified_big or identified_small or delta is epsilon
    return 1 if signs_ok and j in (i - 1, i) else 0


def check_branching() -> CheckReport:
    """hom_dim against a direct restatement of the branching rule for
    n in 1..12, the frozen graph shapes at n = 4 and 5, and the head
    lengths along every arrow."""
    failures = []
    for n in range(1, 13):
        for i in range((n + 1) // 2 + 1):
            for j in range(n // 2 + 1):
                for delta in (Sign.PLUS, Sign.MINUS):
                    for epsilon in (Sign.PLUS, Sign.MINUS):
                        got = branching.hom_dim(n, i, delta, j, epsilon)
                        want = _hom_rule_oracle(n, i, delta, j, epsilon)
                        if got != want:
                            failures.append(
                                f"hom_dim(n={n}, i={i}, {delta}, j={j}, {epsilon})"
                                f" = {got}, rule says {want}"
                            )
    for n, shape in ((4, (6, 5, 10)), (5, (7, 6, 12))):
        graph = branching.branching_graph(n)
        got = (len(graph.nodes_big), len(graph.nodes_small), len(graph.edges))
        if got != shape:
            failures.append(f"graph({n}) shape {got} != {shape}")
    for n in range(1, 13):
        for big, small in branching.branching_graph(n).edges:
            arrow = branching.theta_arrow(n, big.ell, big.sign, small.ell, small.sign)
            if arrow is None:
                failures.append(f"n={n}: edge {big}->{small} lost its arrow")
                continue
            diff = len(arrow[0].head) - len(arrow[1].head)
            if diff not in (0, 1):
                failures.append(f"n={n}: head length gap {diff} on {big}->{small}")
    return CheckReport("branching", not failures, "n in 1..12", failures)


def check_infchar_oracle() -> CheckReport:
    """Equivalence of the lam = i / lam = n-i criterion with Weyl-group
    equivalence of the character vectors under the ambient orthogonal
    Weyl group, for n in 1..12 and integral lam in [-n, 2n]."""
    failures = []
    for n in range(1, 13):
        rho = principal_series.rho_vector(n)
        for i in range(n // 2 + 1):
            for lam in range(-n, 2 * n + 1):
                direct = principal_series.has_rho_infchar(n, i, exact(lam))
                vector = principal_series.infinitesimal_character(n, i, exact(lam))
                oracle = principal_series.weyl_equivalent_orthogonal(n, vector, rho)
                if direct != oracle:
                    failures.append(
                        f"n={n} i={i} lam={lam}: criterion {direct}, Weyl {oracle}"
                    )
                if n % 2 == 0:
                    # even-orthogonal rule alone must agree for even n
                    strict = principal_series.weyl_equivalent_type_d(vector, rho)
                    if strict != oracle:
                        failures.append(
                            f"n={n} i={i} lam={lam}: strict even-flip rule deviates"
                        )
    return CheckReport("infchar-oracle", not failures, "n in 1..12, lam in [-n,2n]", failures)


def check_vogan_packets() -> CheckReport:
    """Packet totals 2**m for m in 1..20 and the member-by-member
    binomial decomposition at m = 2."""
    failures = []
    for m in range(1, 21):
        for kind in (gross_prasad.KIND_DS_ODD, gross_prasad.KIND_TEMPERED_EVEN):
            packet = gross_prasad.vogan_packet(kind, m)
            if packet.total != 2**m:
                failures.append(f"{kind} m={m}: total {packet.total} != {2**m}")
            if packet.character_group_rank != m:
                failures.append(f"{kind} m={m}: rank {packet.character_group_rank}")
    packet = gross_prasad.vogan_packet(gross_prasad.KIND_DS_ODD, 2)
    members = [(mem.form.p, mem.form.q, mem.count) for mem in packet.members]
    if members != [(0, 5, 1), (2, 3, 2), (4, 1, 1)]:
        failures.append(f"ds-odd m=2 members {members}")
    return CheckReport("vogan-packets", not failures, "m in 1..20", failures)


def check_gp_conjecture_i() -> CheckReport:
    """Both profiles agree for the first restriction step: (p,q) is
    (0,m) at even m and (m,0) at odd m, resolving to the rank-one pair,
    for m in 1..12."""
    failures = []
    for m in range(1, 13):
        for profile in (gross_prasad.PROFILE_LITERAL, gross_prasad.PROFILE_CALIBRATED):
            res = gross_prasad.gp_resolution("I", m, profile)
            expected = (0, m) if m % 2 == 0 else (m, 0)
            if (res.p, res.q) != expected:
                failures.append(f"I m={m} {profile}: (p,q)=({res.p},{res.q}) != {expected}")
            forms = tuple(f.signature for f in res.forms)
            if forms != ((2 * m + 1, 1), (2 * m, 1)):
                failures.append(f"I m={m} {profile}: forms {forms}")
            if res.warning is not None:
                failures.append(f"I m={m} {profile}: unexpected warning")
    return CheckReport("gp-conjecture-i", not failures, "m in 1..12", failures)


def check_gp_conjecture_ii() -> CheckReport:
    """Calibrated profile reproduces (m,0) at even m and (0,m-1) at odd
    m with forms SO(1,2m) x SO(1,2m-1); the literal profile's divergence
    at even m is detected and surfaced as a warning."""
    failures = []
    for m in range(1, 13):
        res = gross_prasad.gp_resolution("II", m, gross_prasad.PROFILE_CALIBRATED)
        expected = (m, 0) if m % 2 == 0 else (0, m - 1)
        if (res.p, res.q) != expected:
            failures.append(f"II m={m} calibrated: (p,q)=({res.p},{res.q}) != {expected}")
        forms = tuple(f.signature for f in res.forms)
        if forms != ((1, 2 * m), (1, 2 * m - 1)):
            failures.append(f"II m={m} calibrated: forms {forms}")
        if res.warning is not None:
            failures.append(f"II m={m} calibrated: unexpected warning")
        literal = gross_prasad.gp_resolution("II", m, gross_prasad.PROFILE_LITERAL)
        if m % 2 == 0 and literal.warning is None:
            failures.append(f"II m={m} literal: divergence not flagged")
        if m % 2 == 1 and (literal.p, literal.q) != expected:
            failures.append(f"II m={m} literal: (p,q)=({literal.p},{literal.q})")
    return CheckReport("gp-conjecture-ii", not failures, "m in 1..12", failures)


def check_cross_module() -> CheckReport:
    """Distinguished pairs always support a one-dimensional intertwiner
    space, and an arrow in the branching rule forces a positive
    principal-series multiplicity wherever both tables are defined."""
    failures = []
    for conjecture in ("I", "II"):
        for m in range(1, 13):
            for profile in (gross_prasad.PROFILE_LITERAL, gross_prasad.PROFILE_CALIBRATED):
                pair = gross_prasad.gp_distinguished_pair(conjecture, m, profile)
                if pair.hom_dim != 1:
                    failures.append(f"{conjecture} m={m} {profile}: hom {pair.hom_dim}")
    for n in range(3, 13):
        for i in range(n // 2 + 1):
            for j in range((n - 1) // 2 + 1):
                for epsilon in (Sign.PLUS, Sign.MINUS):
                    if branching.hom_dim(n, i, Sign.PLUS, j, epsilon) != 1:
                        continue
                    res = multiplicity.principal_series_multiplicity(
                        n, i, exact(i), Sign.PLUS, j, exact(j), epsilon
                    )
                    if res.value < 1:
                        failures.append(
                            f"n={n} i={i} j={j} eps={epsilon}: arrow but "
                            f"multiplicity {res.value}"
                        )
    return CheckReport("cross-module", not failures, "pairs m in 1..12, sweep n in 3..12", failures)


_DOT_LINE = re.compile(r'^  "[^"]+"( -> "[^"]+")?;$')


def check_interfaces() -> CheckReport:
    """Canonical JSON stability under reparse, DOT well-formedness, and
    scalar text round-trips."""
    failures = []
    samples = []
    res = multiplicity.principal_series_multiplicity(
        3, 1, exact(1), Sign.PLUS, 1, exact(1), Sign.PLUS
    )
    samples.append(render.mult_json(res, {"n": 3, "i": 1, "lambda": "1"}))
    samples.append(render.graph_json(branching.branching_graph(5)))
    samples.append(render.packet_json(gross_prasad.vogan_packet("ds-odd", 3)))
    samples.append(
        render.resolution_json(gross_prasad.gp_resolution("II", 2, "literal"))
    )
    samples.append(
        render.theta_json(
            irreps.theta_stable_parameter(irreps.IrrepRho(4, 1, Sign.PLUS))
        )
    )
    for doc in samples:
        text = render.canonical_json(doc)
        if render.canonical_json(json.loads(text)) != text:
            failures.append(f"JSON not stable under reparse: {text[:60]}...")
    for n in range(1, 9):
        dot = render.graph_dot(branching.branching_graph(n))
        lines = dot.splitlines()
        if lines[0] != "digraph {" or lines[-1] != "}":
            failures.append(f"n={n}: DOT frame malformed")
        for line in lines[1:-1]:
            if not _DOT_LINE.match(line):
                failures.append(f"n={n}: bad DOT line {line!r}")
    for text in ("3", "-3", "1/2", "-7/3", "0", "2+1/2*i", "-1/2-3*i", "generic"):
        if render.scalar_json(parse_scalar(text)) != text:
            failures.append(f"scalar {text!r} does not round-trip")
    return CheckReport("interfaces", not failures, "JSON/DOT/scalar formats", failures)


# Producers grouped by the report names they emit, so a filter can skip
# whole sweeps instead of running and discarding them.
_CHECK_GROUPS = (
    (("golden-vectors",), None),
    (
        (
            "mult-support-sweep",
            "mult-sign-dependence",
            "mult-case-coverage",
            "multiplicity-one",
        ),
        check_multiplicity_sweeps,
    ),
    (("classification",), lambda: [check_classification()]),
    (("branching",), lambda: [check_branching()]),
    (("infchar-oracle",), lambda: [check_infchar_oracle()]),
    (("vogan-packets",), lambda: [check_vogan_packets()]),
    (("gp-conjecture-i",), lambda: [check_gp_conjecture_i()]),
    (("gp-conjecture-ii",), lambda: [check_gp_conjecture_ii()]),
    (("cross-module",), lambda: [check_cross_module()]),
    (("interfaces",), lambda: [check_interfaces()]),
)


def check_names() -> tuple[str, ...]:
    return tuple(name for names, _ in _CHECK_GROUPS for name in names)


def run_selftest(filter_text: str | None = None, vectors_path=None) -> list[CheckReport]:
    """Run the golden vectors and every invariant sweep.

    ``filter_text`` keeps only checks whose name contains it (skipping
    the others entirely); ``vectors_path`` substitutes the golden-vector
    file.
    """
    reports = []
    for names, producer in _CHECK_GROUPS:
        if filter_text is not None and not any(filter_text in name for name in names):
            continue
        if producer is None:
            produced = [check_golden_vectors(vectors_path)]
        else:
            produced = producer()
        if filter_text is not None:
            produced = [r for r in produced if filter_text in r.name]
        reports.extend(produced)
    return reports
