"""Grid census over (n, d, t) and the named verification suites.

The census emits one row per (n, d <= d_max, t | 2n+2), sorted by
(n, d, t), as CSV or JSON.  Rows are pure functions of their triple, so
the table is byte-identical across runs and worker counts; the
KUMMER_THREADS environment variable caps the worker pool (default: the
machine's available parallelism).
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .bpf import Certificate, certificate_is_valid, decide, exceptional_set
from .moduli import component_count, connectedness_report
from .oracle import SearchBounds, divisibility_crosscheck, nonemptiness_crosscheck
from .witness import Witness, build_witness, verify_witness

CSV_HEADER = "n,d,t,nonempty,components,c_L,c_delta,d_hat,verdict,certificate,in_A,discrepancy"

_FIELDS = CSV_HEADER.split(",")


@dataclass(frozen=True)
class CensusRow:
    n: int
    d: int
    t: int
    nonempty: bool
    components: int
    c_L: Optional[int]
    c_delta: Optional[int]
    d_hat: Optional[int]
    verdict: str
    certificate: Optional[str]
    in_A: bool
    discrepancy: bool
    certificate_detail: Optional[Certificate] = field(
        default=None, repr=False, compare=False
    )


def build_row(n: int, d: int, t: int) -> CensusRow:
    count = component_count(n, d, t).count
    verdict = decide(n, d, t)
    witness: Witness | None = None
    if count > 0 and t >= 2:
        witness = build_witness(n, d, t)
    cert = verdict.certificate
    return CensusRow(
        n=n,
        d=d,
        t=t,
        nonempty=count > 0,
        components=count,
        c_L=witness.shape.c_L if witness else None,
        c_delta=witness.shape.c_delta if witness else None,
        d_hat=witness.d_hat if witness else None,
        verdict=verdict.status,
        certificate=cert.kind if cert else None,
        in_A=verdict.in_exceptional_set,
        discrepancy=verdict.status == "GenericBPF" and verdict.in_exceptional_set,
        certificate_detail=cert,
    )


def worker_count() -> int:
    raw = os.environ.get("KUMMER_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ValueError(f"KUMMER_THREADS must be a positive integer, got {raw!r}")
    return value


def census_rows(
    n_set: Iterable[int], d_max: int, max_workers: int | None = None
) -> list[CensusRow]:
    """All census rows for the given dimensions, sorted by (n, d, t)."""
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    triples = [
        (n, d, t)
        for n in sorted(set(n_set))
        for d in range(1, d_max + 1)
        for t in range(1, 2 * n + 3)
        if (2 * n + 2) % t == 0
    ]
    workers = max_workers if max_workers is not None else worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda args: build_row(*args), triples))
    return [build_row(*triple) for triple in triples]


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def rows_to_csv(rows: Iterable[CensusRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_FIELDS)
    for row in rows:
        writer.writerow([_cell(getattr(row, name)) for name in _FIELDS])
    return buffer.getvalue()


def rows_to_json(rows: Iterable[CensusRow]) -> str:
    payload = [{name: getattr(row, name) for name in _FIELDS} for row in rows]
    return json.dumps(payload, indent=2) + "\n"


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    lines: tuple[str, ...]


def suite_divisibility(coord_bound: int = 3) -> SuiteResult:
    lines = []
    ok = True
    for n in (2, 3, 4):
        mismatches = divisibility_crosscheck(n, coord_bound)
        lines.append(
            f"n={n} coord_bound={coord_bound}: {len(mismatches)} mismatch(es)"
        )
        for coords, ideal, formula in mismatches[:20]:
            ok = False
            lines.append(f"  MISMATCH {coords}: ideal={ideal} formula={formula}")
        ok = ok and not mismatches
    return SuiteResult("divisibility", ok, tuple(lines))


def suite_connectedness(d_max: int = 500) -> SuiteResult:
    lines = []
    ok = True
    for n in (2, 3, 4):
        violations = connectedness_report(n, d_max, 2 * n + 2)
        lines.append(f"n={n} d<={d_max}: {len(violations)} violation(s)")
        for n_, d, t, count in violations[:20]:
            ok = False
            lines.append(f"  VIOLATION (n={n_}, d={d}, t={t}) components={count}")
        ok = ok and not violations
    return SuiteResult("connectedness", ok, tuple(lines))


def suite_nonemptiness(
    d_max: int = 100, bounds: SearchBounds | None = None
) -> SuiteResult:
    lines = []
    ok = True
    for n in (2, 3, 4):
        violations = nonemptiness_crosscheck(n, d_max, bounds)
        lines.append(f"n={n} d<={d_max}: {len(violations)} violation(s)")
        for triple in violations:
            ok = False
            lines.append(f"  NO CLASS FOUND for (n,d,t)={triple}")
        ok = ok and not violations
    return SuiteResult("nonemptiness", ok, tuple(lines))


def suite_witnesses(d_max: int = 500) -> SuiteResult:
    lines = []
    failures = []
    checked = 0
    for n in (2, 3, 4):
        for d in range(1, d_max + 1):
            for t in range(2, 2 * n + 3):
                if (2 * n + 2) % t != 0:
                    continue
                if component_count(n, d, t).count == 0:
                    continue
                checked += 1
                w = build_witness(n, d, t)
                if w is None or not verify_witness(w, n, d, t):
                    failures.append((n, d, t))
    lines.append(f"checked {checked} non-empty triples with t >= 2, d <= {d_max}")
    for triple in failures:
        lines.append(f"  WITNESS FAILURE at (n,d,t)={triple}")
    return SuiteResult("witnesses", not failures, tuple(lines))


def suite_exceptional(d_max: int = 500) -> SuiteResult:
    """Compare the census Unknown set against the seven excluded triples.

    The permitted deviation is a member of the excluded set that the
    search certifies anyway (reported as a discrepancy row); an Unknown
    triple outside the excluded set is always a violation.
    """
    rows = census_rows((2, 3, 4), d_max)
    expected = {triple for triple in exceptional_set() if triple[1] <= d_max}
    unknown = {(r.n, r.d, r.t) for r in rows if r.verdict == "Unknown"}
    discrepant = {(r.n, r.d, r.t) for r in rows if r.discrepancy}

    lines = [
        f"census n in {{2,3,4}}, d <= {d_max}",
        f"unknown triples: {sorted(unknown)}",
        f"expected exclusions in range: {sorted(expected)}",
    ]
    for triple in sorted(discrepant):
        lines.append(
            f"  DISCREPANCY {triple}: excluded but certified (reported, permitted)"
        )
    extra = sorted(unknown - expected)
    missing = sorted(expected - unknown - discrepant)
    for triple in extra:
        lines.append(f"  VIOLATION {triple}: Unknown but not in the excluded set")
    for triple in missing:
        lines.append(f"  VIOLATION {triple}: excluded but neither Unknown nor discrepant")
    return SuiteResult("exceptional", not extra and not missing, tuple(lines))


def verify_certificates(rows: Iterable[CensusRow]) -> list[CensusRow]:
    """Rows whose certificate fails re-verification (expected: none)."""
    bad = []
    for row in rows:
        if row.certificate_detail is None:
            continue
        if not certificate_is_valid(row.n, row.d, row.t, row.certificate_detail):
            bad.append(row)
    return bad
