"""Run the whole catalog of structural checks against the shipped model
files, the same thing `gps check` does.

Run: python demos/04_check_catalog.py
"""

from pathlib import Path

from gpspec import parse_model, run_checks

models = sorted((Path(__file__).parent.parent / "models").glob("*.gps"))

totals = {"pass": 0, "fail": 0, "skip": 0}
for path in models:
    model = parse_model(path.read_text())
    results = run_checks(model, "all", path.stem)
    for r in results:
        totals[r.status] += 1
    worst = [r for r in results if r.status == "fail"]
    passed = sum(1 for r in results if r.status == "pass")
    print(f"{path.stem:16} {passed:2} passed, {len(worst)} failed")
    for r in worst:
        print("   FAIL", r.check_id, r.detail)

print()
print("totals:", totals)
