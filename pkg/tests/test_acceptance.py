"""The ten acceptance criteria, each at its stated size and tolerance.

Every test records one ``criterion N: PASS|FAIL ...`` line; conftest prints
them together at the end of the session.
"""

import json
import time
from pathlib import Path

import pytest

from unitfield.harness import SearchConfig, load_config, run_suite, verify_report
from unitfield.harness.report import read_report, run_search_report
from unitfield.serialize import parse_expr
from unitfield.vojta import UnitEquationInstance, divisibility_check

from conftest import ACCEPTANCE

ROOT = Path(__file__).resolve().parent.parent
CRITERION2 = ROOT / "demos" / "configs" / "criterion2.json"
SEED = 7


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(ACCEPTANCE[n])
    assert ok, ACCEPTANCE[n]


@pytest.fixture(scope="session")
def c2_config() -> SearchConfig:
    cfg = load_config(CRITERION2)
    pool = sorted(str(c) for c in cfg.constant_pool)
    assert pool == sorted(["1", "-1", "2", "-2", "1/2", "-1/2", "4", "-4", "1/4", "-1/4"])
    assert cfg.exponent_bound == 2 and cfg.lam == parse_expr("num=[0,1]")
    return cfg


@pytest.fixture(scope="session")
def c2_report(c2_config, tmp_path_factory):
    out = tmp_path_factory.mktemp("criterion2") / "report-1.jsonl"
    summary = run_search_report(c2_config, out, workers=1)
    return out, summary


@pytest.fixture(scope="session")
def c2_records(c2_report):
    _, recs, summary = read_report(c2_report[0])
    return [r for _, r in recs], summary


def test_criterion_01_identities():
    t0 = time.perf_counter()
    out = run_suite("identities", SEED, 200)
    dt = time.perf_counter() - t0
    ok = out.ok and out.checked == 200 and dt < 30
    record(1, ok, f"{out.checked} instances, {len(out.violations)} violations, {dt:.1f}s < 30s")


def test_criterion_02_trichotomy(c2_records):
    records, summary = c2_records
    empty = [r for r in records if not r["cases"]]
    known = [r for r in records if r["u1"] == "num=[0,1];den=[1]" and r["u2"] == "num=[0,0,-2];den=[1]"]
    has_i = bool(known) and any(
        c["kind"] == "i" and c["subset"] == ["u1^2", "lam*u1", "u2"] for c in known[0]["cases"]
    )
    y_const = bool(known) and parse_expr(known[0]["y"]).is_constant()
    unclassified = summary["case_counts"]["unclassified"]
    ok = records and not empty and has_i and y_const and unclassified == 0
    record(2, bool(ok), f"{len(records)} solutions, known solution case (i): {has_i}, "
           f"unclassified {unclassified}")


def test_criterion_03_divisibility(c2_config, c2_records):
    records, _ = c2_records
    bad = 0
    for r in records:
        inst = UnitEquationInstance.from_units(
            c2_config.S, c2_config.lam, parse_expr(r["u1"]), parse_expr(r["u2"])
        )
        if not divisibility_check(inst).ok or not r["divisibility"]:
            bad += 1
    record(3, bad == 0 and len(records) > 0, f"{len(records)} solutions rechecked, {bad} violations")


def test_criterion_04_corvaja_zannier():
    out = run_suite("cz", SEED, 500)
    record(4, out.ok and out.checked == 500,
           f"{out.checked} pairs, branches {out.stats}, (t, t^2) witness gcd_sum 1 <= 1, "
           f"{len(out.violations)} violations")


def test_criterion_05_zannier():
    out = run_suite("zannier", SEED, 500)
    ok = out.ok and out.checked == 500 and out.stats["rejected"] > 0
    record(5, ok, f"{out.checked} tuples accepted, {out.stats['rejected']} rejected, "
           f"(t, 1) equality 1 = 1, {len(out.violations)} violations")


def test_criterion_06_derivative():
    out = run_suite("derivative-bound", SEED, 500)
    ok = out.ok and out.stats["designation_checks"] == 100 and out.checked == 600
    record(6, ok, f"500 units + {out.stats['designation_checks']} designation swaps, "
           f"max H/chi {out.stats['max_height_over_chi']}, {len(out.violations)} violations")


def test_criterion_07_moduli():
    out = run_suite("moduli", SEED, 100)
    ok = out.ok and out.checked == 300
    record(7, ok, f"100 coefficients = 16/(l^2-4), 200 fourples x 8, normal crossing fails "
           f"only at +-2, {len(out.violations)} violations")


def test_criterion_08_cover():
    out = run_suite("cover", SEED, 50)
    ok = out.ok and out.checked == 50 + 40
    record(8, ok, f"50 instances, max chi_U/bound {out.stats['max_chi_ratio']}, genus oracle "
           f"deg 1..8, {len(out.violations)} violations")


def test_criterion_09_discriminants():
    out = run_suite("discriminant-bounds", SEED, 200)
    ok = out.ok and out.checked == 200
    record(9, ok, f"200 instances, {len(out.violations)} violations, "
           f"{len(out.findings)} distinct drift findings (non-fatal)")


def test_criterion_10_determinism(c2_config, c2_report, tmp_path):
    path1, _ = c2_report
    path4 = tmp_path / "report-4.jsonl"
    run_search_report(c2_config, path4, workers=4)
    identical = path1.read_bytes() == path4.read_bytes()
    verified = verify_report(path1)
    # single-field mutation: bump one height in the middle of the report
    lines = path1.read_text().splitlines()
    k = len(lines) // 2
    rec = json.loads(lines[k])
    rec["heights"]["y"] += 1
    lines[k] = json.dumps(rec, separators=(",", ":"))
    mutated = tmp_path / "mutated.jsonl"
    mutated.write_text("\n".join(lines) + "\n")
    res = verify_report(mutated)
    caught = not res.ok and res.mismatches[0][0] == k + 1
    ok = identical and verified.ok and caught
    record(10, ok, f"1 vs 4 workers byte-identical: {identical}, verify: {verified.ok} "
           f"({verified.checked} records), mutation at line {k + 1} caught: {caught}")
