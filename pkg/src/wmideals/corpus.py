"""Fixture corpus runner behind ``wmideals verify-fixtures``.

A corpus directory holds SNC configurations (``*.json``) and a ``cases/``
subdirectory.  Each case file looks like::

    {"argv": ["c-dims", "--config", "{fixtures}/example44.json", "--ambient", "3"],
     "exit": 0,
     "expected_json": {"dims": {"2": 2, "3": 8}}}

``expected_json`` is matched as a subset of the command's JSON output;
``expected_text`` must equal the output exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class VerifyReport:
    passed: list[str] = field(default_factory=list)
    failed: dict[str, list[str]] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.passed) and not self.failed and not self.problems

    def render(self) -> str:
        lines = [f"PASS {name}" for name in self.passed]
        for name, diffs in self.failed.items():
            lines.append(f"FAIL {name}")
            lines.extend(f"  {d}" for d in diffs)
        lines.extend(self.problems)
        lines.append(f"{len(self.passed)} passed, {len(self.failed)} failed")
        return "\n".join(lines) + "\n"


def subset_diff(expected, actual, path="$") -> list[str]:
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{path}: expected an object, got {json.dumps(actual)}"]
        diffs = []
        for key, value in expected.items():
            if key not in actual:
                diffs.append(f"{path}.{key}: missing")
            else:
                diffs.extend(subset_diff(value, actual[key], f"{path}.{key}"))
        return diffs
    if expected != actual:
        return [f"{path}: expected {json.dumps(expected)}, got {json.dumps(actual)}"]
    return []


def run_case(case: dict, root: Path) -> list[str]:
    from .cli import run

    argv = [str(tok).replace("{fixtures}", str(root)) for tok in case["argv"]]
    result = run(argv)
    diffs = []
    want_exit = case.get("exit", 0)
    if result.code != want_exit:
        diffs.append(f"exit status: expected {want_exit}, got {result.code} ({result.err.strip()})")
    if "expected_text" in case and result.out != case["expected_text"]:
        diffs.append(f"output: expected {case['expected_text']!r}, got {result.out!r}")
    if "expected_json" in case:
        try:
            actual = json.loads(result.out)
        except json.JSONDecodeError:
            diffs.append(f"output is not JSON: {result.out!r}")
        else:
            diffs.extend(subset_diff(case["expected_json"], actual))
    return diffs


def verify(root: Path) -> VerifyReport:
    report = VerifyReport()
    cases = sorted((root / "cases").glob("*.json")) if (root / "cases").is_dir() else []
    if not cases:
        report.problems.append(f"no fixtures found under {root / 'cases'}")
        return report
    for path in cases:
        name = path.stem
        try:
            case = json.loads(path.read_text())
            diffs = run_case(case, root)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            diffs = [f"unreadable case file: {exc!r}"]
        if diffs:
            report.failed[name] = diffs
        else:
            report.passed.append(name)
    return report
