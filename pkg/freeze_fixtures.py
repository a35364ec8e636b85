import json
import os

from flask import current_app

from app import create_app
from koszulgraphs.harness import run_table

# Classes whose connected six-vertex counts are known independently
FROZEN_FLAGS = ("bipartite", "perfect", "strongly_koszul", "threshold", "trivially_perfect")


def freeze_table_counts(json_path: str, n: int = 6):
    """Recompute the connected n-vertex table and write its per-class counts."""
    existing = {}
    if os.path.exists(json_path):
        with open(json_path, "r", encoding="utf-8") as f:
            existing = json.load(f)

    config = current_app.config
    report = run_table(
        n,
        int(config["KOSZUL_DEGREE_BOUND"]),
        workers=int(config["KOSZUL_WORKERS"]),
        progress=True,
    )

    # Counts already in the fixture are fixed; never overwrite a disagreement
    mismatched = []
    if existing.get("total") not in (None, report.total):
        mismatched.append(f"total {existing['total']} != {report.total}")
    for flag, expected in existing.get("counts", {}).items():
        if report.counts.get(flag) != expected:
            mismatched.append(f"{flag} {expected} != {report.counts.get(flag)}")

    if mismatched:
        print("❌ Table counts disagree with the fixture; nothing written.")
        for line in mismatched:
            print(f"   {line}")
        return False

    data = {
        "n": n,
        "total": report.total,
        "counts": {flag: report.counts[flag] for flag in FROZEN_FLAGS},
    }
    with open(json_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")

    print("✅ Table fixture frozen.")
    print(f"   Report: {report.code}")
    print(f"   Graphs: {report.total}")
    for flag in FROZEN_FLAGS:
        print(f"   {flag}: {report.counts[flag]}")
    return True


def main():
    base_dir = os.path.abspath(os.path.dirname(__file__))
    json_path = os.path.join(base_dir, "data", "table_counts_n6.json")

    app = create_app()

    with app.app_context():
        ok = freeze_table_counts(json_path)

    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
