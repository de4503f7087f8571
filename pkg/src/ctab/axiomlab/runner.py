"""Running laws on models and summarizing the verdicts."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from ctab.axiomlab import generators as gen
from ctab.axiomlab.laws import REGISTRY, Case, Unmet, dependencies
from ctab.errors import CtabError

PASS = "pass"
FAIL = "fail"
UNMET = "side-condition-unmet"

MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class LawCase:
    law: str
    index: int
    seed: str
    verdict: str
    inputs: dict[str, str] = field(default_factory=dict)
    witness: dict[str, str] = field(default_factory=dict)
    attempts: int = 1


def _case_seed(seed: int | str, law_id: str, index: int) -> str:
    return f"{seed}:{law_id}:{index}"


def run_case(law_id: str, model, seed: int | str, index: int,
             vars: tuple | None = None) -> LawCase:
    """Evaluate one instance; the same arguments always give the same verdict."""
    law = REGISTRY[law_id]
    case_seed = _case_seed(seed, law_id, index)
    rng = random.Random(case_seed)
    vars = vars or gen.pool()
    for attempt in range(1, MAX_ATTEMPTS + 1):
        case = Case(rng, model, vars)
        try:
            ok = law.check(case)
        except Unmet:
            continue
        except CtabError as exc:
            ok = False
            case.note("error", exc)
        inputs = {k: repr(v) for k, v in case.inputs.items()}
        if ok:
            return LawCase(law_id, index, case_seed, PASS, inputs, attempts=attempt)
        witness = dict(inputs)
        witness.update({k: repr(v) for k, v in case.notes.items()})
        return LawCase(law_id, index, case_seed, FAIL, inputs, witness, attempt)
    return LawCase(law_id, index, case_seed, UNMET, attempts=MAX_ATTEMPTS)


def check_law(law_id: str, model, cases: int = 200, seed: int | str = 0,
              vars: tuple | None = None) -> list[LawCase]:
    if law_id not in REGISTRY:
        raise KeyError(f"unknown law {law_id!r}; known: {', '.join(REGISTRY)}")
    return [run_case(law_id, model, seed, i, vars) for i in range(cases)]


def replay(case: LawCase, model, vars: tuple | None = None) -> LawCase:
    seed, _, index = case.seed.rsplit(":", 2)
    return run_case(case.law, model, seed, int(index), vars)


@dataclass
class LawSummary:
    law: str
    suite: str
    statement: str
    cases: int
    counts: Counter
    expected_failure: bool
    first_failure: LawCase | None = None

    @property
    def passed(self) -> int:
        return self.counts[PASS]

    @property
    def failed(self) -> int:
        return self.counts[FAIL]

    @property
    def unmet(self) -> int:
        return self.counts[UNMET]


@dataclass
class Report:
    model: object
    seed: int | str
    laws: list[LawSummary]

    @property
    def unexpected_failures(self) -> list[LawSummary]:
        return [s for s in self.laws if s.failed and not s.expected_failure]

    @property
    def ok(self) -> bool:
        return not self.unexpected_failures

    def by_id(self, law_id: str) -> LawSummary:
        return next(s for s in self.laws if s.law == law_id)

    def text(self) -> str:
        lines = [f"model: {self.model}   seed: {self.seed}"]
        width = max((len(s.law) for s in self.laws), default=4)
        for s in self.laws:
            if s.failed:
                status = "FAIL (expected)" if s.expected_failure else "FAIL"
            elif s.unmet:
                status = "UNMET"
            else:
                status = "ok"
            lines.append(
                f"  {s.law:<{width}}  {status:<15} {s.passed:>4}/{s.cases} pass"
                f"  {s.failed:>4} fail  {s.unmet:>4} unmet   {s.statement}"
            )
            if s.first_failure is not None:
                w = ", ".join(f"{k}={v}" for k, v in s.first_failure.witness.items())
                lines.append(f"  {'':<{width}}  witness (seed {s.first_failure.seed}): {w}")
        failed = sum(1 for s in self.laws if s.failed)
        lines.append(
            f"{len(self.laws)} laws, {failed} with failures, "
            f"{len(self.unexpected_failures)} unexpected"
        )
        return "\n".join(lines) + "\n"

    def machine_lines(self) -> str:
        out = []
        for s in self.laws:
            w = "-"
            if s.first_failure is not None:
                w = ";".join(f"{k}={v}" for k, v in s.first_failure.witness.items())
            out.append(
                f"LAW\t{s.law}\tcases={s.cases}\tpass={s.passed}\tfail={s.failed}"
                f"\tunmet={s.unmet}\texpected={'yes' if s.expected_failure else 'no'}\twitness={w}"
            )
        return "\n".join(out) + "\n"


def expected_to_fail(law_id: str, model) -> bool:
    """Whether the law's proof relies on an axiom the model is known to violate."""
    return bool(dependencies(law_id) & model.violates)


def check_all(model, cases: int = 200, seed: int | str = 0,
              laws: Iterable[str] | None = None, vars: tuple | None = None) -> Report:
    ids = list(REGISTRY) if laws is None else list(laws)
    summaries = []
    for law_id in ids:
        results = check_law(law_id, model, cases, seed, vars)
        counts = Counter(r.verdict for r in results)
        first = next((r for r in results if r.verdict == FAIL), None)
        law = REGISTRY[law_id]
        summaries.append(LawSummary(law_id, law.suite, law.statement, cases, counts,
                                    expected_to_fail(law_id, model), first))
    return Report(model, seed, summaries)
