"""Report assembly and serialization.

A report is a plain dict: JSON output is sorted and indented so two runs
with the same scenario and flags produce identical bytes once the wall
times are stripped (the only nondeterministic fields).
"""

from __future__ import annotations

import csv
import io
import json


def build_report(scenario_raw, effective, results) -> dict:
    suites = []
    for r in results:
        entry = {
            "name": r.name,
            "trials": r.trials,
            "failures": r.failures,
            "notes": r.notes,
            "wall_time_s": round(r.wall_time_s, 6),
            "pass": r.passed,
        }
        if r.detail is not None:
            entry["detail"] = r.detail
        suites.append(entry)
    return {
        "report_version": 1,
        "scenario": scenario_raw,
        "effective": effective,
        "suites": suites,
        "pass": all(r.passed for r in results),
    }


def canonical(report: dict) -> dict:
    """Copy with timing removed, for byte-for-byte comparisons."""
    out = json.loads(json.dumps(report))
    for entry in out.get("suites", []):
        entry.pop("wall_time_s", None)
    return out


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def to_csv(report: dict) -> str:
    """One line per suite: the delimited summary of the same run."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "trials", "failures", "pass"])
    for entry in report["suites"]:
        writer.writerow(
            [entry["name"], entry["trials"], len(entry["failures"]), entry["pass"]]
        )
    writer.writerow(["total", "", "", report["pass"]])
    return buf.getvalue()


def summary_lines(report: dict):
    lines = []
    for entry in report["suites"]:
        status = "ok" if entry["pass"] else f"FAIL ({len(entry['failures'])} residuals)"
        lines.append(f"{entry['name']:<10} trials={entry['trials']:<6} {status}")
        for note in entry["notes"]:
            lines.append(f"           note: {note}")
    lines.append("overall: " + ("PASS" if report["pass"] else "FAIL"))
    return lines
