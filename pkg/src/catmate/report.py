"""Check reports: stable, machine- and human-serializable."""

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"


@dataclass
class CheckRecord:
    id: str
    anchor: str
    status: str                 # pass | fail | undecided | skipped
    witness: str = ""
    runtime: float = 0.0


@dataclass
class Report:
    suite: str
    records: list = field(default_factory=list)

    def add(self, record):
        self.records.append(record)

    def summary(self):
        counts = {"pass": 0, "fail": 0, "undecided": 0, "skipped": 0}
        for r in self.records:
            counts[r.status] += 1
        return counts

    @property
    def exit_code(self):
        counts = self.summary()
        if counts["fail"]:
            return 1
        if counts["undecided"]:
            return 2
        return 0

    def to_dict(self, include_runtime=True):
        recs = []
        for r in self.records:
            d = {"id": r.id, "anchor": r.anchor, "status": r.status,
                 "witness": r.witness}
            if include_runtime:
                d["runtime"] = round(r.runtime, 6)
            recs.append(d)
        return {"schema_version": SCHEMA_VERSION, "suite": self.suite,
                "summary": self.summary(), "checks": recs}

    def to_json(self, include_runtime=True):
        return json.dumps(self.to_dict(include_runtime), indent=2,
                          sort_keys=True) + "\n"

    def to_text(self):
        width = max((len(r.id) for r in self.records), default=0)
        lines = [f"suite {self.suite} (schema {SCHEMA_VERSION})"]
        for r in self.records:
            line = f"{r.status.upper():9s} {r.id:{width}s}  {r.anchor}"
            if r.witness:
                line += f"  [{r.witness}]"
            lines.append(line)
        counts = self.summary()
        lines.append("summary: " + ", ".join(f"{k}={v}"
                                             for k, v in counts.items()))
        return "\n".join(lines) + "\n"
