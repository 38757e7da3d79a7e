import logging
import multiprocessing as mp
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import islice
from multiprocessing import Pool
from typing import Callable, Dict, List, Optional, Tuple

from tqdm import tqdm

from ..config.verification_config import VerificationConfig
from ..data.enumerators import candidate_count, connected_graphs_in_range, enumerate_transit_functions, transit_count
from ..data.graph6 import emit_graph6, parse_graph6, read_graph6_stream
from ..data.loaders import fixture_profile, list_fixtures, load_fixture
from ..errors import GraphToolError, UnknownTheoremError
from .axioms import AxiomId, axiom_profile, check_axiom, lemma_s1s2_failure, satisfies_all
from .gated import AmalgamSpec, closure_corpus, corpus_graphs, gated_amalgam
from .graph import Graph, is_connected, make_prism
from .metric import (
    check_tdc_pairwise,
    classify,
    is_bridged_by_characterization,
    is_bridged_by_cycles,
    is_diamond_weakly_modular,
    is_weakly_bridged,
    is_well_bridged_cycle,
)
from .patterns import dominated_five_cycle_check, simple_cycles
from .transit import TransitFunction, equals_interval_function, interval_function, underlying_graph

logger = logging.getLogger(__name__)

A = AxiomId
BASELINE_AXIOMS = (A.T1, A.T2, A.T3)
WMD_AXIOMS = (A.T1, A.T2, A.T3, A.B3, A.J0P, A.TA)
BRIDGED_AXIOMS = WMD_AXIOMS + (A.BR,)
WEAKLY_BRIDGED_AXIOMS = WMD_AXIOMS + (A.BRP,)
INTERVAL_AXIOMS = (A.T1, A.T2, A.B2, A.B3, A.B4, A.S1, A.S2)
RELATION_AXIOMS = (A.IB1, A.IB2, A.IB3, A.IB4, A.IB5, A.IB6, A.TA)
EXHAUSTIVE_TRANSIT_SIZES = (1, 2, 3, 4)


class TheoremId(str, Enum):
    T_4_1 = "T-4.1"
    T_4_2 = "T-4.2"
    T_5_1 = "T-5.1"
    T_5_2 = "T-5.2"
    T_5_3 = "T-5.3"
    T_5_4 = "T-5.4"
    T_3_3 = "T-3.3"
    T_3_5 = "T-3.5"
    T_2_4 = "T-2.4"
    L_2_2 = "L-2.2"
    L_2_3 = "L-2.3"
    L_3_4 = "L-3.4"
    L_S1S2 = "L-s1s2"
    P_3_2 = "P-3.2"
    X_PRISM = "X-PRISM"
    X_INDEP = "X-INDEP"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        for theorem in cls:
            if theorem.value.lower() == text.strip().lower():
                return theorem
        raise UnknownTheoremError(text)


def _names(axioms) -> str:
    return ",".join(a.value for a in axioms)


def _iff(left: str, lhs: bool, right: str, rhs: bool) -> Optional[str]:
    if lhs == rhs:
        return None
    return f"{left} is {lhs} but {right} is {rhs}"


# Graph-side checks: each returns a description of the violation or None

def check_j0p_iff_dwm(g: Graph) -> Optional[str]:
    holds = check_axiom(interval_function(g), A.J0P).holds
    return _iff("J0p on the interval function", holds, "diamond-weakly modular", is_diamond_weakly_modular(g))


def check_dwm_interval_axioms(g: Graph) -> Optional[str]:
    holds = satisfies_all(interval_function(g), WMD_AXIOMS)
    return _iff(_names(WMD_AXIOMS) + " on the interval function", holds,
                "diamond-weakly modular", is_diamond_weakly_modular(g))


def check_bridged_iff_j0p_br(g: Graph) -> Optional[str]:
    axioms = satisfies_all(interval_function(g), (A.J0P, A.BR))
    characterization = is_bridged_by_characterization(g)
    cycle = is_bridged_by_cycles(g)
    if axioms == characterization == (cycle is None):
        return None
    return (f"J0p,br on the interval function is {axioms}, C4/C5-free weakly modular is {characterization}, "
            f"isometric cycle {list(cycle.cycle) if cycle else None}")


def check_bridged_interval_axioms(g: Graph) -> Optional[str]:
    holds = satisfies_all(interval_function(g), BRIDGED_AXIOMS)
    return _iff(_names(BRIDGED_AXIOMS) + " on the interval function", holds,
                "bridged", is_bridged_by_characterization(g))


def check_weakly_bridged_iff_j0p_brp(g: Graph) -> Optional[str]:
    holds = satisfies_all(interval_function(g), (A.J0P, A.BRP))
    return _iff("J0p,brp on the interval function", holds, "weakly bridged", is_weakly_bridged(g))


def check_weakly_bridged_interval_axioms(g: Graph) -> Optional[str]:
    holds = satisfies_all(interval_function(g), WEAKLY_BRIDGED_AXIOMS)
    return _iff(_names(WEAKLY_BRIDGED_AXIOMS) + " on the interval function", holds,
                "weakly bridged", is_weakly_bridged(g))


def check_interval_axioms(g: Graph) -> Optional[str]:
    r = interval_function(g)
    failed = [rep.axiom.value for rep in axiom_profile(r, INTERVAL_AXIOMS).values() if not rep.holds]
    if failed:
        return "interval function fails " + ",".join(failed)
    if not equals_interval_function(r):
        return "interval function differs from the interval function of its underlying graph"
    return None


def check_relation_axioms(g: Graph) -> Optional[str]:
    profile = axiom_profile(interval_function(g), RELATION_AXIOMS + (A.IB7, A.S2))
    failed = [a.value for a in RELATION_AXIOMS if not profile[a].holds]
    if failed:
        return "interval function fails " + ",".join(failed)
    return _iff("IB7", profile[A.IB7].holds, "s2", profile[A.S2].holds)


def check_bridged_cycles(g: Graph) -> Optional[str]:
    characterization = is_bridged_by_characterization(g)
    cycle = is_bridged_by_cycles(g)
    if characterization != (cycle is None):
        return f"C4/C5-free weakly modular is {characterization} but isometric cycle is {cycle}"
    if not characterization:
        return None
    if not is_diamond_weakly_modular(g):
        return "bridged graph is not diamond-weakly modular"
    for c in simple_cycles(g):
        if not is_well_bridged_cycle(g, c):
            return f"cycle {list(c)} of a bridged graph is not well-bridged"
    return None


def check_inclusion_chain(g: Graph) -> Optional[str]:
    report = classify(g)
    broken = report.chain_violations()
    if broken:
        return "broken inclusions: " + ", ".join(broken)
    if not report.diamond_weakly_modular or check_tdc_pairwise(g) is not None:
        return None
    if not dominated_five_cycle_check(g):
        return "graph with QC and pairwise TDC has an undominated five-vertex obstruction"
    return None


# Transit-side checks

def _characterizes(r: TransitFunction, axioms, graph_test: Callable[[Graph], bool], label: str) -> Optional[str]:
    if not satisfies_all(r, axioms):
        return None
    g = underlying_graph(r)
    if not is_connected(g):
        return f"{_names(axioms)} hold but the underlying graph is disconnected"
    if not graph_test(g):
        return f"{_names(axioms)} hold but the underlying graph is not {label}"
    if not equals_interval_function(r):
        return f"{_names(axioms)} hold but R is not the interval function of its underlying graph"
    return None


def check_wmd_axioms(r: TransitFunction) -> Optional[str]:
    return _characterizes(r, WMD_AXIOMS, is_diamond_weakly_modular, "diamond-weakly modular")


def check_bridged_axioms(r: TransitFunction) -> Optional[str]:
    return _characterizes(r, BRIDGED_AXIOMS, is_bridged_by_characterization, "bridged")


def check_weakly_bridged_axioms(r: TransitFunction) -> Optional[str]:
    return _characterizes(r, WEAKLY_BRIDGED_AXIOMS, is_weakly_bridged, "weakly bridged")


def check_interval_equivalence(r: TransitFunction) -> Optional[str]:
    holds = satisfies_all(r, INTERVAL_AXIOMS)
    g = underlying_graph(r)
    is_interval = is_connected(g) and equals_interval_function(r)
    return _iff(_names(INTERVAL_AXIOMS), holds, "R is an interval function", is_interval)


def _implies(r: TransitFunction, premises, conclusions) -> Optional[str]:
    if not satisfies_all(r, premises):
        return None
    failed = [a.value for a in conclusions if not check_axiom(r, a).holds]
    if failed:
        return f"{_names(premises)} hold but {','.join(failed)} fail"
    return None


def check_connectivity_lemma(r: TransitFunction) -> Optional[str]:
    if satisfies_all(r, BASELINE_AXIOMS + (A.B1, A.B2)) and not is_connected(underlying_graph(r)):
        return "t1,t2,t3,b1,b2 hold but the underlying graph is disconnected"
    return None


def check_j0_implies_j0p(r: TransitFunction) -> Optional[str]:
    return _implies(r, (A.J0,), (A.J0P,))


def check_br_implies_brp(r: TransitFunction) -> Optional[str]:
    return _implies(r, (A.T3, A.BR), (A.BRP,))


def check_b3_implies_b1(r: TransitFunction) -> Optional[str]:
    return _implies(r, (A.B3,), (A.B1,))


def check_b2_and_connected(r: TransitFunction) -> Optional[str]:
    premises = BASELINE_AXIOMS + (A.J0P, A.B3)
    found = _implies(r, premises, (A.B2,))
    if found is None and satisfies_all(r, premises) and not is_connected(underlying_graph(r)):
        return f"{_names(premises)} hold but the underlying graph is disconnected"
    return found


def check_ta_implies_s1_s2(r: TransitFunction) -> Optional[str]:
    return _implies(r, BASELINE_AXIOMS + (A.B2, A.B3, A.TA), (A.S1, A.S2))


def check_lemma_s1s2(r: TransitFunction) -> Optional[str]:
    if not satisfies_all(r, BASELINE_AXIOMS + (A.B2, A.B3)):
        return None
    found = lemma_s1s2_failure(r)
    if found is not None:
        return f"no x in R(u,v)∩R(u,w) with R(x,v)∩R(x,w)={{x}} for (u,v,w)={found}"
    return None


GRAPH_CHECKS: Dict[str, Callable[[Graph], Optional[str]]] = {
    "j0p_iff_dwm": check_j0p_iff_dwm,
    "dwm_interval_axioms": check_dwm_interval_axioms,
    "bridged_iff_j0p_br": check_bridged_iff_j0p_br,
    "bridged_interval_axioms": check_bridged_interval_axioms,
    "weakly_bridged_iff_j0p_brp": check_weakly_bridged_iff_j0p_brp,
    "weakly_bridged_interval_axioms": check_weakly_bridged_interval_axioms,
    "interval_axioms": check_interval_axioms,
    "relation_axioms": check_relation_axioms,
    "bridged_cycles": check_bridged_cycles,
    "inclusion_chain": check_inclusion_chain,
}

TRANSIT_CHECKS: Dict[str, Callable[[TransitFunction], Optional[str]]] = {
    "wmd_axioms": check_wmd_axioms,
    "bridged_axioms": check_bridged_axioms,
    "weakly_bridged_axioms": check_weakly_bridged_axioms,
    "interval_equivalence": check_interval_equivalence,
    "connectivity_lemma": check_connectivity_lemma,
    "j0_implies_j0p": check_j0_implies_j0p,
    "br_implies_brp": check_br_implies_brp,
    "b3_implies_b1": check_b3_implies_b1,
    "b2_and_connected": check_b2_and_connected,
    "ta_implies_s1_s2": check_ta_implies_s1_s2,
    "lemma_s1s2": check_lemma_s1s2,
}


@dataclass(frozen=True)
class Campaign:
    theorem: TheoremId
    description: str
    graph_checks: Tuple[str, ...] = ()
    transit_checks: Tuple[str, ...] = ()
    special: Optional[str] = None


CAMPAIGNS: Dict[TheoremId, Campaign] = {c.theorem: c for c in (
    Campaign(TheoremId.T_4_1, "J0p on I_G iff G is diamond-weakly modular", graph_checks=("j0p_iff_dwm",)),
    Campaign(TheoremId.T_4_2, "t1,t2,t3,b3,J0p,ta characterize interval functions of diamond-weakly modular graphs",
             graph_checks=("dwm_interval_axioms",), transit_checks=("wmd_axioms",)),
    Campaign(TheoremId.T_5_1, "J0p and br on I_G iff G is bridged", graph_checks=("bridged_iff_j0p_br",)),
    Campaign(TheoremId.T_5_2, "t1,t2,t3,b3,J0p,ta,br characterize interval functions of bridged graphs",
             graph_checks=("bridged_interval_axioms",), transit_checks=("bridged_axioms",)),
    Campaign(TheoremId.T_5_3, "J0p and brp on I_G iff G is weakly bridged",
             graph_checks=("weakly_bridged_iff_j0p_brp",)),
    Campaign(TheoremId.T_5_4, "t1,t2,t3,b3,J0p,ta,brp characterize interval functions of weakly bridged graphs",
             graph_checks=("weakly_bridged_interval_axioms",), transit_checks=("weakly_bridged_axioms",)),
    Campaign(TheoremId.T_3_3, "t1,t2,b2,b3,b4,s1,s2 hold exactly for interval functions",
             graph_checks=("interval_axioms", "relation_axioms"), transit_checks=("interval_equivalence",)),
    Campaign(TheoremId.T_3_5, "t1,t2,t3,J0p,b3 imply b2 and a connected underlying graph",
             transit_checks=("b2_and_connected",)),
    Campaign(TheoremId.T_2_4, "diamond-weakly modular graphs are closed under gated amalgamation", special="amalgam"),
    Campaign(TheoremId.L_2_2, "bridged graphs are diamond-weakly modular and their cycles are well-bridged",
             graph_checks=("bridged_cycles",)),
    Campaign(TheoremId.L_2_3, "class inclusion chain and dominated five-vertex obstructions",
             graph_checks=("inclusion_chain",)),
    Campaign(TheoremId.L_3_4, "connectivity of the underlying graph and elementary implications",
             transit_checks=("connectivity_lemma", "j0_implies_j0p", "br_implies_brp", "b3_implies_b1")),
    Campaign(TheoremId.L_S1S2, "geometric transit functions have a common median-like point",
             transit_checks=("lemma_s1s2",)),
    Campaign(TheoremId.P_3_2, "geometric transit functions with ta satisfy s1 and s2",
             transit_checks=("ta_implies_s1_s2",)),
    Campaign(TheoremId.X_PRISM, "the prism is weakly modular without TDC", special="prism"),
    Campaign(TheoremId.X_INDEP, "every shipped fixture reproduces its axiom profile", special="fixtures"),
)}


@dataclass
class CampaignReport:
    """Outcome of one verification campaign"""
    theorem: str
    universe: Dict[str, object]
    violations: List[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "universe": self.universe,
            "violations": self.violations,
            "pass": self.passed,
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _graph_violation(check: str, g: Graph, message: str) -> dict:
    return {"check": check, "graph6": emit_graph6(g), "n": g.n, "message": message}


def _transit_violation(check: str, r: TransitFunction, message: str) -> dict:
    return {"check": check, "n": r.n, "table": list(r.table), "message": message}


def _run_check(check: Callable, subject) -> Optional[str]:
    try:
        return check(subject)
    except GraphToolError as e:
        return f"{type(e).__name__}: {e}"


def _check_prism() -> List[dict]:
    g = make_prism()
    report = classify(g)
    witness = report.witnesses.get("diamond_weakly_modular")
    problems = []
    if not report.weakly_modular:
        problems.append("prism is not weakly modular")
    if report.diamond_weakly_modular or getattr(witness, "kind", None) != "TDC":
        problems.append("prism has no TDC witness")
    return [_graph_violation("prism_tdc", g, "; ".join(problems))] if problems else []


def check_fixture(name: str) -> Optional[str]:
    profile = fixture_profile(name)
    reports = axiom_profile(load_fixture(name), (profile.fails,) + profile.holds + profile.discrepancies)
    problems = []
    if reports[profile.fails].holds:
        problems.append(f"{profile.fails.value} holds")
    problems += [f"{a.value} fails" for a in profile.holds if not reports[a].holds]
    problems += [f"{a.value} holds" for a in profile.discrepancies if reports[a].holds]
    return "; ".join(problems) or None


def check_amalgam(spec) -> Optional[str]:
    if not (is_diamond_weakly_modular(spec.g1) and is_diamond_weakly_modular(spec.g2)):
        return None
    g = gated_amalgam(spec)
    if not is_connected(g):
        return "amalgam is disconnected"
    if not is_diamond_weakly_modular(g):
        return "amalgam is not diamond-weakly modular"
    return None


class CampaignEngine:
    """Runs verification campaigns over chunked universes, optionally in parallel"""

    def __init__(self, config: VerificationConfig):
        self.config = config

    def _tasks(self, campaign: Campaign) -> List[Tuple[tuple, str, tuple]]:
        cfg = self.config
        tasks = []
        if campaign.graph_checks and cfg.graph_stream is not None:
            with open(cfg.graph_stream, "r") as f:
                total = sum(1 for line in f if line.strip())
            for start in range(0, total, cfg.chunk_size):
                tasks.append(((0, 0, start), "stream", (cfg.graph_stream, start, start + cfg.chunk_size)))
        elif campaign.graph_checks:
            for n in range(1, cfg.max_n + 1):
                total = candidate_count(n)
                for start in range(0, total, cfg.chunk_size):
                    tasks.append(((0, n, start), "graph", (n, start, start + cfg.chunk_size)))
        if campaign.transit_checks:
            for n in EXHAUSTIVE_TRANSIT_SIZES:
                total = transit_count(n)
                for start in range(0, total, cfg.chunk_size):
                    tasks.append(((1, n, start), "transit", (n, start, start + cfg.chunk_size)))
            for n in cfg.sample_sizes:
                for chunk, start in enumerate(range(0, cfg.transit_samples, cfg.chunk_size)):
                    count = min(cfg.chunk_size, cfg.transit_samples - start)
                    tasks.append(((2, n, chunk), "sampled", (n, chunk, count)))
        if campaign.special == "amalgam":
            for name, _ in corpus_graphs(cfg.corpus_max_order):
                tasks.append(((3, name, 0), "amalgam", (name,)))
        elif campaign.special is not None:
            tasks.append(((3, campaign.special, 0), campaign.special, ()))
        return tasks

    def _run_chunk(self, args: Tuple[tuple, str, tuple, str]) -> Tuple[tuple, str, int, List[dict]]:
        """Evaluate one chunk of a campaign universe (for parallel processing)"""
        key, kind, payload, theorem = args
        campaign = CAMPAIGNS[TheoremId(theorem)]
        violations: List[dict] = []
        checked = 0

        if kind in ("graph", "stream"):
            if kind == "graph":
                n, start, stop = payload
                graphs = connected_graphs_in_range(n, start, stop)
            else:
                path, start, stop = payload
                with open(path, "r") as f:
                    graphs = list(islice(read_graph6_stream(f), start, stop))
            for g in graphs:
                checked += 1
                for name in campaign.graph_checks:
                    message = _run_check(GRAPH_CHECKS[name], g)
                    if message is not None:
                        violations.append(_graph_violation(name, g, message))
        elif kind in ("transit", "sampled"):
            if kind == "transit":
                n, start, stop = payload
                stream = islice(enumerate_transit_functions(n), start, stop)
            else:
                n, chunk, count = payload
                stream = enumerate_transit_functions(n, samples=count, seed=self.config.seed, chunk=chunk)
            for r in stream:
                checked += 1
                for name in campaign.transit_checks:
                    message = _run_check(TRANSIT_CHECKS[name], r)
                    if message is not None:
                        violations.append(_transit_violation(name, r, message))
        elif kind == "amalgam":
            (first,) = payload
            cfg = self.config
            for name1, name2, spec in closure_corpus(cfg.corpus_max_shared, cfg.corpus_max_order, first=first):
                checked += 1
                message = _run_check(check_amalgam, spec)
                if message is not None:
                    violations.append({
                        "check": "amalgam_closure", "g1": name1, "g2": name2,
                        "iso": [list(p) for p in spec.iso], "spec": spec.to_json(), "message": message,
                    })
        elif kind == "prism":
            checked = 1
            violations = _check_prism()
        elif kind == "fixtures":
            for name in list_fixtures():
                checked += 1
                message = _run_check(check_fixture, name)
                if message is not None:
                    violations.append({"check": "fixture_profile", "fixture": name, "message": message})

        if violations and mp.current_process().name == 'MainProcess':
            logger.debug("chunk %s: %d violations", key, len(violations))
        return key, kind, checked, violations

    def verify(self, theorem) -> CampaignReport:
        """Run one campaign and collect every violation in universe order"""
        theorem = theorem if isinstance(theorem, TheoremId) else TheoremId.parse(theorem)
        campaign = CAMPAIGNS[theorem]
        cfg = self.config
        started = time.perf_counter()
        tasks = [(key, kind, payload, theorem.value) for key, kind, payload in self._tasks(campaign)]
        logger.info("Running %s over %d chunks using %d workers", theorem.value, len(tasks), cfg.num_workers)

        results = []
        pbar = tqdm(
            total=len(tasks),
            desc=theorem.value,
            unit="chunk",
            disable=not cfg.show_progress,
            bar_format='{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}, {rate_fmt}] {postfix}'
        )
        checked = 0
        found = 0
        if cfg.parallel and len(tasks) > 1:
            num_cores = min(cfg.num_workers, len(tasks))
            with Pool(num_cores) as pool:
                for result in pool.imap_unordered(self._run_chunk, tasks):
                    results.append(result)
                    checked += result[2]
                    found += len(result[3])
                    pbar.set_postfix_str(f"checked {checked:,} | violations {found:,}")
                    pbar.update(1)
        else:
            for task in tasks:
                result = self._run_chunk(task)
                results.append(result)
                checked += result[2]
                found += len(result[3])
                pbar.set_postfix_str(f"checked {checked:,} | violations {found:,}")
                pbar.update(1)
        pbar.close()

        # imap_unordered doesn't preserve order
        results.sort(key=lambda x: x[0])
        universe = dict(cfg.universe())
        universe["description"] = campaign.description
        for kind, label in (("graph", "graphs"), ("stream", "graphs"), ("transit", "transit_exhaustive"),
                            ("sampled", "transit_sampled"), ("amalgam", "amalgams"),
                            ("prism", "instances"), ("fixtures", "fixtures")):
            if any(t[1] == kind for t in tasks):
                universe[label] = sum(c for _, k, c, _ in results if k == kind)
        violations = [v for _, _, _, vs in results for v in vs]
        report = CampaignReport(theorem.value, universe, violations, time.perf_counter() - started)
        logger.info("%s: %s, %d violations in %.1fs", theorem.value,
                    "pass" if report.passed else "FAIL", len(violations), report.elapsed)
        return report


def verify_theorem(theorem, config: Optional[VerificationConfig] = None) -> CampaignReport:
    return CampaignEngine(config or VerificationConfig()).verify(theorem)


def _subject(violation: dict):
    if "graph6" in violation:
        return parse_graph6(violation["graph6"])
    if "table" in violation:
        return TransitFunction(violation["n"], tuple(violation["table"]))
    return None


def replay_violation(theorem, violation: dict) -> bool:
    """Re-run the failed check on a serialized violation; True when it still fails"""
    theorem = theorem if isinstance(theorem, TheoremId) else TheoremId.parse(theorem)
    campaign = CAMPAIGNS[theorem]
    check = violation.get("check")
    if check in campaign.graph_checks:
        return _run_check(GRAPH_CHECKS[check], _subject(violation)) is not None
    if check in campaign.transit_checks:
        return _run_check(TRANSIT_CHECKS[check], _subject(violation)) is not None
    if check == "fixture_profile":
        return _run_check(check_fixture, violation["fixture"]) is not None
    if check == "amalgam_closure":
        return _run_check(check_amalgam, AmalgamSpec.from_json(violation["spec"])) is not None
    if check == "prism_tdc":
        return bool(_check_prism())
    return False


def _shrink(subject, still_violates: Callable[[object], bool]):
    changed = True
    while changed and subject.n > 1:
        changed = False
        for v in range(subject.n):
            keep = [w for w in range(subject.n) if w != v]
            smaller = subject.induced(keep) if isinstance(subject, Graph) else subject.restrict(keep)
            try:
                violates = still_violates(smaller)
            except GraphToolError:
                violates = False
            if violates:
                subject = smaller
                changed = True
                break
    return subject


def minimize_counterexample(
    report: CampaignReport, still_violates: Optional[Callable[[object], bool]] = None
) -> CampaignReport:
    """Shrink each graph or transit violation by vertex deletion while it still violates"""
    minimized = []
    for violation in report.violations:
        subject = _subject(violation)
        if subject is None:
            minimized.append(violation)
            continue
        check = violation.get("check")
        checks = GRAPH_CHECKS if isinstance(subject, Graph) else TRANSIT_CHECKS
        if still_violates is not None:
            predicate = still_violates
        elif check in checks:
            def predicate(s, _check=checks[check]):
                if isinstance(s, Graph) and not is_connected(s):
                    return False
                return _check(s) is not None
        else:
            minimized.append(violation)
            continue
        smaller = _shrink(subject, predicate)
        if smaller.n == subject.n:
            minimized.append(violation)
            continue
        shrunk = dict(violation, n=smaller.n, minimized_from=subject.n)
        if isinstance(smaller, Graph):
            shrunk["graph6"] = emit_graph6(smaller)
        else:
            shrunk["table"] = list(smaller.table)
        if still_violates is None and check in checks:
            shrunk["message"] = _run_check(checks[check], smaller)
        minimized.append(shrunk)
    return replace(report, violations=minimized)
