"""Machine-readable verification reports with a fixed field order."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields

from ..padic.matrix import Z2Matrix

EXIT_CODES = {"Success": 0, "Failure": 1, "Inconclusive": 2}


def matrix_strings(M: Z2Matrix) -> list:
    """Row-major strings ``"2^v * u mod 2^p"``."""
    return M.to_strings()


@dataclass
class VerificationReport:
    curve: dict
    selmer: dict
    assumptions: dict = field(default_factory=dict)
    etale: dict = field(default_factory=dict)
    expansions: dict = field(default_factory=dict)
    lattice: dict | None = None
    selmer_image_H2: list = field(default_factory=list)
    selmer_image_F2g: list | None = None
    unit_disk: dict = field(default_factory=dict)
    Z_P0: dict | None = None
    Z_inf: dict | None = None
    verdict: dict = field(default_factory=dict)
    conditionality: str = ""
    notes: list = field(default_factory=list)

    @classmethod
    def empty(cls, curve, selmer) -> "VerificationReport":
        prov = selmer.provenance or "unspecified"
        cond = f"conditional on the supplied Selmer data (provenance: {prov})"
        return cls(curve=curve.to_dict(), selmer=selmer.to_dict(), conditionality=cond)

    # -- verdicts -------------------------------------------------------------

    def success(self) -> "VerificationReport":
        self.verdict = {"status": "Success", "witness": None, "reason":
                        "the rational points are exactly infinity, (0, h(0)), (0, -h(0))"}
        return self

    def failure(self, witness: dict) -> "VerificationReport":
        self.verdict = {"status": "Failure", "witness": witness,
                        "reason": "a local class meets the Selmer image"}
        return self

    def inconclusive(self, reason: str) -> "VerificationReport":
        self.verdict = {"status": "Inconclusive", "witness": None, "reason": reason}
        return self

    @property
    def status(self) -> str:
        return self.verdict.get("status", "Inconclusive")

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        names = [f.name for f in fields(cls)]
        missing = [n for n in names if n not in d]
        if missing:
            raise ValueError(f"report is missing fields {missing}")
        return cls(**{n: d[n] for n in names})

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        lines = [f"curve: {self.curve.get('name') or ''} g={self.curve['g']} h={self.curve['h_text']}",
                 f"selmer: mode={self.selmer['mode']} provenance={self.selmer['provenance']!r}"]
        if self.etale:
            lines.append(f"etale: factor degrees {self.etale['factor_degrees']}, dim H2 = "
                         f"{self.etale['dim_H2']}, I = {self.etale['I_set']}, delta2 dim = "
                         f"{self.etale['delta2_dimension']}")
        if self.selmer_image_F2g is not None:
            lines.append(f"Selmer image in F2^g: {self.selmer_image_F2g}")
        if self.unit_disk:
            lines.append(f"unit disk: {self.unit_disk['status']} x0 = {self.unit_disk['x0_mod8']}"
                         f" pass = {self.unit_disk['pass']}")
        for name, z in (("Z(P0)", self.Z_P0), ("Z(inf)", self.Z_inf)):
            if z is not None:
                lines.append(f"{name} = {z['classes']}")
        lines.append(f"verdict: {self.status}"
                     + (f" witness={self.verdict['witness']}" if self.verdict.get("witness") else "")
                     + (f" ({self.verdict['reason']})" if self.status == "Inconclusive" else ""))
        lines.append(self.conditionality)
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)
