"""Reducing "is A_n(c) a square" to small indices, and the irreducibility chain.

If f_c^(n-1) is irreducible and A_n(c) is not a square, then f_c^n is
irreducible.  Every case of a reduction plan is a necessary consequence of
A_n(c) being a square, so excluding any single case settles index n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .iterates import prime_factors

STATUS_ORDER = ("Unconditional", "GRH", "Unknown")
TRIVIAL_C = frozenset({0, -1})


@dataclass(frozen=True)
class ReductionCase:
    index: int
    signs: tuple
    rationale: str

    @property
    def target(self) -> str:
        return ("±" if self.signs == (1, -1) else "") + f"A_{self.index}"

    def to_dict(self) -> dict:
        return {"target": self.target, "index": self.index, "signs": list(self.signs),
                "rationale": self.rationale}


@dataclass(frozen=True)
class ReductionPlan:
    n: int
    cases: tuple
    conclusion: str

    @property
    def targets(self) -> list[str]:
        return [c.target for c in self.cases]

    def to_dict(self) -> dict:
        return {"n": self.n, "cases": [c.to_dict() for c in self.cases],
                "conclusion": self.conclusion}


def reduce_square_question(n: int) -> ReductionPlan:
    """Consequences of A_n(c) being a square.

    Uses A_n = A_m * B with B a nonzero 3-adic square unit whenever every
    extra factor B_d has d > 2, together with Res(A_m, B) = +-1.
    """
    if n < 2:
        raise ValueError("reduce_square_question needs n >= 2")
    if n % 2:
        cases = tuple(ReductionCase(p, (1,), f"odd n: A_{p}(c) is a square as well")
                      for p in prime_factors(n))
        return ReductionPlan(n, cases, "A_n(c) square implies A_p(c) square for every prime p | n")
    if n % 4 == 0:
        case = ReductionCase(4, (1,), "4 | n: A_4(c) is a square as well, so c in {0, -1}")
        return ReductionPlan(n, (case,), "c in {0, -1}")
    m = n // 2
    cases = [ReductionCase(p, (1, -1), f"n = 2 * odd: A_{p}(c) or -A_{p}(c) is a square")
             for p in prime_factors(m)]
    cases.append(ReductionCase(2, (1,), "A_2(c) = c(c + 1) is a square"))
    return ReductionPlan(n, tuple(cases),
                         "for each odd prime p | n/2 one of +-A_p(c) is a square, and A_2(c) is")


# -- facts database -------------------------------------------------------------


@dataclass
class FactsDB:
    facts: list
    status_of_provenance: dict = field(default_factory=dict)

    @classmethod
    def load(cls, path=None) -> "FactsDB":
        if path is None:
            text = resources.files(__package__).joinpath("facts.json").read_text()
        else:
            with open(path) as fh:
                text = fh.read()
        data = json.loads(text)
        return cls(data["facts"], data["status_of_provenance"])

    def lookup(self, index: int, sign: int):
        for f in self.facts:
            if f["index"] == index and f["sign"] == sign:
                return f
        return None

    def exclusion_status(self, index: int, sign: int) -> tuple[str, list]:
        """Status of "sign * A_index(c) is a square only for c in {0, -1}"."""
        f = self.lookup(index, sign)
        if f is None or not set(f["exceptional"]) <= TRIVIAL_C:
            return "Unknown", []
        return self.status_of_provenance.get(f["provenance"], "Unknown"), [f["id"]]


def _worst(statuses) -> str:
    return max(statuses, key=STATUS_ORDER.index, default="Unconditional")


def _best(statuses) -> str:
    return min(statuses, key=STATUS_ORDER.index, default="Unknown")


def link_status(n: int, facts: FactsDB) -> dict:
    """Status of "A_n(c) is not a square for c not in {0, -1}"."""
    routes = []
    st, used = facts.exclusion_status(n, 1)
    routes.append({"route": "direct", "status": st, "facts": used})
    if n >= 2:
        plan = reduce_square_question(n)
        for case in plan.cases:
            if case.index >= n:
                continue
            parts = [facts.exclusion_status(case.index, s) for s in case.signs]
            st = _worst(p[0] for p in parts)
            routes.append({"route": f"reduction via {case.target}", "status": st,
                           "facts": [x for p in parts for x in p[1]]})
    best = _best(r["status"] for r in routes)
    chosen = next(r for r in routes if r["status"] == best)
    return {"n": n, "status": best, "route": chosen["route"], "facts": chosen["facts"],
            "routes": routes}


def irreducibility_chain(n: int, facts: FactsDB | None = None) -> dict:
    """Status of "f_c^2 irreducible implies f_c^n irreducible" for rational c.

    The chain needs A_k(c) non-square for every 3 <= k <= n; c = 0 and c = -1
    are excluded because f_c^2 is reducible there.
    """
    facts = facts or FactsDB.load()
    links = [link_status(k, facts) for k in range(3, n + 1)]
    status = _worst(l["status"] for l in links)
    return {"n": n, "status": status, "links": links}
