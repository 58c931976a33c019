"""Line-delimited JSON reports: header, one record per solution, summary.

Every line is ``json.dumps`` with fixed separators and insertion-ordered
keys, so identical runs give byte-identical files.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .. import __version__
from ..errors import ConfigError, ReportParseError, UnitFieldError
from .config import SearchConfig
from .search import SearchStats, Searcher, search, solution_record

__all__ = [
    "REPORT_FORMAT",
    "REPORT_VERSION",
    "RunManifest",
    "dumps",
    "write_report",
    "run_search_report",
    "read_report",
    "VerifyResult",
    "verify_report",
]

REPORT_FORMAT = "unitfield-report"
REPORT_VERSION = 1


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


@dataclass
class RunManifest:
    config_digest: str
    artifact_version: str
    suite_outcomes: dict = field(default_factory=dict)
    case_counts: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    violations: int = 0

    def to_dict(self) -> dict:
        return {
            "config_digest": self.config_digest,
            "artifact_version": self.artifact_version,
            "suite_outcomes": self.suite_outcomes,
            "case_counts": self.case_counts,
            "findings": self.findings,
            "violations": self.violations,
        }


def _header(config: SearchConfig) -> dict:
    return {
        "type": "header",
        "format": REPORT_FORMAT,
        "version": REPORT_VERSION,
        "artifact_version": __version__,
        "config_digest": config.digest(),
        "config": config.to_dict(),
    }


def case_counts(records: Iterable[dict]) -> dict:
    counts: Counter = Counter()
    for r in records:
        kinds = [c["kind"] for c in r["cases"]]
        for k in kinds:
            counts[k] += 1
        if not kinds:
            counts["unclassified"] += 1
    return {k: counts.get(k, 0) for k in ("i", "ii", "iii", "unclassified")}


def _summary(records: list[dict], stats: SearchStats) -> dict:
    findings = sorted({f for r in records for f in r["findings"] if not f.startswith("bound-variant")})
    return {
        "type": "summary",
        "records": len(records),
        "case_counts": case_counts(records),
        "violations": sum(len(r["violations"]) for r in records),
        "stats": stats.to_dict(),
        "findings": findings,
    }


def write_report(path: str | Path, config: SearchConfig, records: list[dict], stats: SearchStats) -> None:
    lines = [dumps(_header(config))]
    lines += [dumps(r) for r in records]
    lines.append(dumps(_summary(records, stats)))
    Path(path).write_text("\n".join(lines) + "\n")


def run_search_report(config: SearchConfig, out: str | Path, workers: int | None = None) -> dict:
    records, stats = search(config, workers)
    write_report(out, config, records, stats)
    return _summary(records, stats)


def read_report(path: str | Path) -> tuple[dict, list[tuple[int, dict]], dict | None]:
    """``(header, [(line_number, record)], summary)``; malformed lines raise
    ReportParseError with their 1-based line number."""
    header, records, summary = None, [], None
    with open(path) as fh:
        for n, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ReportParseError(n, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(obj, dict) or "type" not in obj:
                raise ReportParseError(n, "record is not an object with a 'type'")
            kind = obj["type"]
            if n == 1 or header is None:
                if kind != "header" or obj.get("format") != REPORT_FORMAT:
                    raise ReportParseError(n, "first line must be a report header")
                if obj.get("version") != REPORT_VERSION:
                    raise ReportParseError(n, f"unsupported report version {obj.get('version')!r}")
                header = obj
            elif summary is not None:
                raise ReportParseError(n, "content after the summary line")
            elif kind == "solution":
                records.append((n, obj))
            elif kind == "summary":
                summary = obj
            else:
                raise ReportParseError(n, f"unknown record type {kind!r}")
    if header is None:
        raise ReportParseError(1, "empty report")
    return header, records, summary


@dataclass
class VerifyResult:
    ok: bool
    checked: int
    mismatches: list[tuple[int, str]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _unit_index(searcher: Searcher, c: str, e: list, line: int) -> int:
    try:
        ci = searcher.constants.index(Fraction(c))
        ei = searcher.exps.index(tuple(e))
    except (ValueError, TypeError) as exc:
        raise ReportParseError(line, f"key ({c}, {e}) is not in the search grid") from exc
    return ci * len(searcher.exps) + ei


def verify_report(path: str | Path) -> VerifyResult:
    """Recompute every record from its grid key and compare field by field.

    Solutions are re-derived from scratch: the equation, unit membership,
    case claims and all bound arithmetic.  The summary must match the
    recomputed records too.  The artifact version may differ; only the
    format version must match.
    """
    header, records, summary = read_report(path)
    try:
        config = SearchConfig.from_dict(header["config"])
    except (ConfigError, KeyError) as exc:
        raise ReportParseError(1, f"bad config in header: {exc}") from exc
    if config.digest() != header.get("config_digest"):
        return VerifyResult(False, 0, [(1, "config digest does not match the config")])
    searcher = Searcher(config)
    mismatches: list[tuple[int, str]] = []
    fresh = []
    seen = set()
    for line, rec in records:
        key = rec.get("key")
        if not isinstance(key, dict):
            raise ReportParseError(line, "record without a key")
        try:
            i = _unit_index(searcher, key["c1"], key["e1"], line)
            j = _unit_index(searcher, key["c2"], key["e2"], line)
        except KeyError as exc:
            raise ReportParseError(line, f"key missing {exc}") from exc
        if (i, j) in seen:
            mismatches.append((line, "duplicate record"))
            continue
        seen.add((i, j))
        try:
            expected = solution_record(searcher, i, j)
        except UnitFieldError as exc:
            mismatches.append((line, f"not a solution: {exc}"))
            continue
        fresh.append(expected)
        if expected != rec:
            bad = sorted(k for k in set(expected) | set(rec) if expected.get(k) != rec.get(k))
            mismatches.append((line, "fields differ: " + ", ".join(bad)))
    order = [(_unit_index(searcher, r["key"]["c1"], r["key"]["e1"], n),
              _unit_index(searcher, r["key"]["c2"], r["key"]["e2"], n)) for n, r in records]
    if order != sorted(order):
        mismatches.append((0, "records are not in grid order"))
    if summary is None:
        mismatches.append((0, "missing summary line"))
    else:
        if summary.get("records") != len(records):
            mismatches.append((0, "summary record count differs"))
        if summary.get("case_counts") != case_counts(fresh):
            mismatches.append((0, "summary case counts differ"))
        if summary.get("violations") != sum(len(r["violations"]) for r in fresh):
            mismatches.append((0, "summary violation count differs"))
    return VerifyResult(not mismatches, len(records), mismatches)
