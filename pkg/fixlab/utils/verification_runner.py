"""
Fixlab - Verification runner
Runs every applicable lemma checker over a catalog, filters instances whose
hypotheses fail, and writes deterministic CSV and JSONL reports
"""

import asyncio
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from mpmath import mp

from fixlab.bounds.checkers import (
    check_center_exponent,
    check_center_rank,
    check_corollary1,
    check_lemma1,
    check_lemma3,
    check_lemma4,
    check_lemma_class,
    check_lemma_class_factorial,
    check_lemma_lqp,
    check_plus_structure,
    check_theorem_main,
    check_theorem_suborbit,
    check_tutte,
)
from fixlab.bounds.special_functions import WORKING_DPS
from fixlab.catalog.constants import ConstantsRegistry
from fixlab.graphs.orbital import is_connected
from fixlab.graphs.quotients import check_cover_rank
from fixlab.groups.fixity import relative_fixity
from fixlab.groups.structure import RANK_CAP, class_representatives, normal_closure
from fixlab.models.catalog_entry import CatalogEntry
from fixlab.models.errors import CapacityError, NotTransitiveError, PreconditionError
from fixlab.models.perm_group import PermGroup
from fixlab.models.reports import BoundReport, LemmaId
from fixlab.utils.report_factory import ReportFactory
from fixlab.utils.report_writer import ReportWriter

logger = logging.getLogger(__name__)

ALL_LEMMAS: Set[LemmaId] = set(LemmaId)
DEFAULT_ALPHAS = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 10))
ELEMENTS_PER_ENTRY = 8
REPORT_NAME = 'reports'
SCATTER_NAME = 'scatter.csv'

GRAPH_CHECKERS: Dict[LemmaId, Callable[..., BoundReport]] = {
    LemmaId.COR1: check_corollary1,
    LemmaId.L4: check_lemma4,
    LemmaId.LZ_EXP: check_center_exponent,
    LemmaId.LZ_RANK: check_center_rank,
    LemmaId.LPLUS: check_plus_structure,
    LemmaId.LLQP: check_lemma_lqp,
    LemmaId.TUTTE: check_tutte,
}


@dataclass
class Exclusion:
    instance_id: str
    lemma_id: LemmaId
    reason: str


@dataclass
class EntryOutcome:
    reports: List[BoundReport] = field(default_factory=list)
    exclusions: List[Exclusion] = field(default_factory=list)
    scatter: Optional[Dict] = None


@dataclass
class VerificationResult:
    reports: List[BoundReport]
    exclusions: List[Exclusion]
    scatter: List[Dict]
    paths: List[str] = field(default_factory=list)

    @property
    def failures(self) -> List[BoundReport]:
        return [r for r in self.reports if not r.holds]

    @property
    def all_pass(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.all_pass else 1


def parse_lemmas(text: Optional[str]) -> Set[LemmaId]:
    """Comma separated lemma ids; None or 'all' selects everything, '' selects nothing"""
    if text is None or text.strip().lower() == 'all':
        return set(ALL_LEMMAS)
    lemmas = set()
    for part in text.split(','):
        if part.strip():
            lemma = LemmaId.parse(part)
            lemmas.add(lemma)
            if lemma is LemmaId.L3A:
                lemmas.add(LemmaId.L3B)
            elif lemma is LemmaId.L3B:
                lemmas.add(LemmaId.L3A)
    return lemmas


class EntryVerifier:
    """Collects the reports of one catalog entry; hypothesis failures become exclusions"""

    def __init__(self, entry: CatalogEntry, lemmas: Set[LemmaId], alphas: Sequence[Fraction],
                 registry: ConstantsRegistry):
        self.entry = entry
        self.lemmas = lemmas
        self.alphas = alphas
        self.registry = registry
        self.outcome = EntryOutcome()

    def _attempt(self, lemma_id: LemmaId, run: Callable[[], object]) -> None:
        if lemma_id not in self.lemmas:
            return
        try:
            result = run()
        except (PreconditionError, NotTransitiveError) as e:
            self._exclude(lemma_id, str(e))
            return
        except CapacityError as e:
            logger.warning(f"{self.entry.id} skipped for {lemma_id.value}: {e}")
            self._exclude(lemma_id, str(e))
            return
        reports = result if isinstance(result, tuple) else (result,)
        for report in reports:
            if not report.holds:
                logger.error(f"{report.instance_id}: {report.lemma_id.value} FAILED "
                             f"lhs={report.lhs} rhs={report.rhs} context={report.context}")
            self.outcome.reports.append(report)

    def _exclude(self, lemma_id: LemmaId, reason: str) -> None:
        logger.info(f"{self.entry.id} excluded from {lemma_id.value}: {reason}")
        self.outcome.exclusions.append(Exclusion(self.entry.id, lemma_id, reason))

    def _elements(self):
        reps = [r for r in class_representatives(self.entry.group) if not r.is_identity()]
        return reps[:ELEMENTS_PER_ENTRY]

    def _actions(self) -> List[Tuple[str, PermGroup]]:
        actions = [('group', self.entry.group)]
        for name, group in sorted(self.entry.subgroups.items()):
            if group.generators != self.entry.group.generators:
                actions.append((name, group))
        return actions

    def group_lemmas(self) -> None:
        X = self.entry.group
        eid = self.entry.id
        if not X.is_transitive():
            for lemma_id in (LemmaId.L3A, LemmaId.L3B, LemmaId.LCLASS, LemmaId.LCLASS_FACT, LemmaId.L1):
                if lemma_id in self.lemmas:
                    self._exclude(lemma_id, "group is not transitive")
            return
        group_ids = {LemmaId.L3A, LemmaId.L3B, LemmaId.LCLASS, LemmaId.LCLASS_FACT}
        elements = self._elements() if self.lemmas & group_ids else []
        for g in elements:
            self._attempt(LemmaId.L3A, lambda: check_lemma3(X, g, 0, instance_id=eid))
            closure = normal_closure(X, g)
            if closure.order() != X.order():
                self._attempt(LemmaId.L3A, lambda: check_lemma3(X, g, 0, G=closure, instance_id=eid))
            self._attempt(LemmaId.LCLASS, lambda: check_lemma_class(X, g, 0, instance_id=eid))
            self._attempt(LemmaId.LCLASS_FACT, lambda: check_lemma_class_factorial(X, g, instance_id=eid))
        self._attempt(LemmaId.L1, lambda: check_lemma1(X, instance_id=eid))

    def graph_lemmas(self) -> None:
        graph, X, profile = self.entry.graph, self.entry.group, self.entry.profile
        for lemma_id, checker in GRAPH_CHECKERS.items():
            self._attempt(lemma_id, lambda: checker(graph, X, instance_id=self.entry.id, profile=profile))

    def cover_lemma(self) -> None:
        if LemmaId.LCOVER not in self.lemmas:
            return
        if not is_connected(self.entry.graph):
            self._exclude(LemmaId.LCOVER, "hypothesis failed: connected")
            return
        for name, group in self._actions():
            if not group.is_semiregular():
                logger.debug(f"{self.entry.id}: action {name} is not semiregular")
                continue
            if group.order() > RANK_CAP:
                self._exclude(LemmaId.LCOVER, f"action {name} of order {group.order()} exceeds {RANK_CAP}")
                continue

            def run(group=group, name=name):
                report = check_cover_rank(self.entry.graph, group, instance_id=self.entry.id)
                report.context['action'] = name
                return report
            self._attempt(LemmaId.LCOVER, run)

    def theorem(self) -> None:
        graph, X = self.entry.graph, self.entry.group
        local_name = self.entry.local_group_name
        for alpha in self.alphas:
            if LemmaId.THM_MAIN in self.lemmas and local_name is None:
                self._exclude(LemmaId.THM_MAIN, "no registered local group")
            else:
                self._attempt(LemmaId.THM_MAIN, lambda: check_theorem_main(
                    graph, X, local_name, alpha, self.registry, self.entry.id, self.entry.profile))
            if self.entry.profile is None or not self.entry.profile.arc or graph.edge_count() == 0:
                if LemmaId.THM_SUBORBIT in self.lemmas:
                    self._exclude(LemmaId.THM_SUBORBIT, "hypothesis failed: arc-transitive")
                continue
            delta = graph.neighbors(0)[0]
            condition3 = self.entry.has_tag('condition-3')
            self._attempt(LemmaId.THM_SUBORBIT, lambda: check_theorem_suborbit(
                X, 0, delta, alpha, condition3, self.registry, self.entry.id))

    def scatter_point(self) -> Optional[Dict]:
        if self.entry.group.order() == 1:
            return None
        return {
            'instance_id': self.entry.id,
            'vertices': self.entry.graph.n_vertices,
            'rfx': relative_fixity(self.entry.group).rfx,
        }

    def run(self, scatter: bool = False) -> EntryOutcome:
        logger.info(f"Verifying {self.entry.id}")
        self.group_lemmas()
        self.graph_lemmas()
        self.cover_lemma()
        self.theorem()
        if scatter:
            self.outcome.scatter = self.scatter_point()
        return self.outcome


def verify_entry(entry: CatalogEntry, lemmas: Set[LemmaId], alphas: Sequence[Fraction] = DEFAULT_ALPHAS,
                 registry: Optional[ConstantsRegistry] = None, scatter: bool = False) -> EntryOutcome:
    return EntryVerifier(entry, lemmas, alphas, registry or ConstantsRegistry.builtin()).run(scatter)


async def run_verification(catalog: Iterable[CatalogEntry], lemmas: Set[LemmaId],
                           alphas: Sequence[Fraction] = DEFAULT_ALPHAS, out_dir: Optional[str] = None,
                           registry: Optional[ConstantsRegistry] = None, workers: int = 4,
                           scatter_path: Optional[str] = None) -> VerificationResult:
    """
    One worker task per entry, results gathered in catalog order
    - writes reports.csv and reports.jsonl under out_dir when given
    - the scatter file holds rfx against |V| for every entry with a nontrivial group
    """
    registry = registry or ConstantsRegistry.builtin()
    entries = list(catalog)
    semaphore = asyncio.Semaphore(max(1, workers))

    async def run_one(entry: CatalogEntry) -> EntryOutcome:
        async with semaphore:
            return await asyncio.to_thread(verify_entry, entry, lemmas, alphas, registry, scatter_path is not None)

    with mp.workdps(WORKING_DPS):
        outcomes = await asyncio.gather(*(run_one(entry) for entry in entries))
    reports = ReportFactory.sort_reports(r for outcome in outcomes for r in outcome.reports)
    exclusions = [x for outcome in outcomes for x in outcome.exclusions]
    scatter = [o.scatter for o in outcomes if o.scatter is not None]
    result = VerificationResult(reports=reports, exclusions=exclusions, scatter=scatter)

    if out_dir is not None:
        for report_format in ('csv', 'jsonl'):
            writer = ReportWriter(out_dir, report_format)
            writer.queues[REPORT_NAME]  # header is written even when nothing was checked
            await writer.queue_reports(REPORT_NAME, reports)
            await writer.flush_all_queues()
            result.paths.append(writer.path_for(REPORT_NAME))
    if scatter_path is not None:
        directory = os.path.dirname(scatter_path) or '.'
        writer = ReportWriter(directory)
        result.paths.append(await writer.write_text(os.path.basename(scatter_path), ReportFactory.scatter_csv(scatter)))

    logger.info(f"Verified {len(entries)} entries: {len(reports)} reports, {len(result.failures)} failures, "
                f"{len(exclusions)} exclusions")
    return result
