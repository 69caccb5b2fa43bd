"""The builtin x verb command matrix covered by the golden-output tests."""

from __future__ import annotations

VERBS = ["validate", "connection", "curvature", "ricci", "star-ricci", "lee",
         "lck", "conditions", "suite", "report"]

SPEC_SOURCES = {
    "inoue-s0": ["--builtin", "inoue-s0"],
    "kodaira_p1p1": ["--builtin", "kodaira", "--signs", "+1,+1"],
    "kodaira_p1m1": ["--builtin", "kodaira", "--signs", "+1,-1"],
    "kodaira_m1p1": ["--builtin", "kodaira", "--signs=-1,+1"],
    "kodaira_m1m1": ["--builtin", "kodaira", "--signs=-1,-1"],
}

VERIFY_ASSIGNMENTS = {
    "inoue-s0": "a1=0,a2=1,a3=0,a4=0",
    "kodaira_p1p1": "a1=0,a2=0",
    "kodaira_p1m1": "a1=0,a2=0",
    "kodaira_m1p1": "a1=0,a2=0",
    "kodaira_m1m1": "a1=0,a2=0",
}


def _build() -> dict[str, list[str]]:
    cases: dict[str, list[str]] = {}
    for spec_key, source in SPEC_SOURCES.items():
        for verb in VERBS:
            cases[f"{spec_key}__{verb}"] = [verb, *source]
        cases[f"{spec_key}__verify"] = [
            "verify", *source, "--assign", VERIFY_ASSIGNMENTS[spec_key]]
    return cases


GOLDEN_CASES = _build()
