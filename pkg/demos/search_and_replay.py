"""A small exhaustive search, its report, and an independent replay.

Units are c * t^a (t-1)^b with |a|, |b| <= 2 and c from an 8-element pool.
The report is line-delimited JSON; verify recomputes every record from its
grid key, so a hand-edited field is caught and pinpointed.
"""

import json
import tempfile
from collections import Counter
from pathlib import Path

from unitfield.harness import SearchConfig, run_search_report, verify_report

cfg = SearchConfig.from_dict({
    "S": ["0", "1", "inf"],
    "lam": "num=[0,1];den=[1]",
    "exponent_bound": 2,
    "constant_pool": ["1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3"],
    "strict": False,
})

tmp = Path(tempfile.mkdtemp())
report = tmp / "report.jsonl"
summary = run_search_report(cfg, report)
print("searched", summary["stats"]["pairs"], "pairs;",
      summary["stats"]["filter_passed"], "survived the modular filter;",
      summary["records"], "solutions")
print("case counts:", summary["case_counts"])

lines = report.read_text().splitlines()
first = json.loads(lines[1])
print("\nfirst record:")
print("  u1 =", first["u1"], " u2 =", first["u2"], " y =", first["y"])
print("  cases:", [c["kind"] for c in first["cases"]], " regime:", first["regime"])

regimes = Counter(json.loads(line)["regime"] for line in lines[1:-1])
print("regimes:", dict(regimes))

print("\nverify untouched:", verify_report(report).ok)

rec = json.loads(lines[5])
rec["heights"]["u2"] += 1
lines[5] = json.dumps(rec, separators=(",", ":"))
tampered = tmp / "tampered.jsonl"
tampered.write_text("\n".join(lines) + "\n")
res = verify_report(tampered)
print("verify tampered:", res.ok, res.mismatches)
