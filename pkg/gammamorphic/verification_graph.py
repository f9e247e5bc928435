"""
LangGraph orchestration of the identity verification suite.

The workflow:
- Selects catalog entries (optionally filtered) and expands their grids
- Runs every grid point, concurrently when SUITE_WORKERS > 1
- Applies the erratum protocol to each raw report
- Summarizes counts by status and logs failing verified identities
"""

from __future__ import annotations

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import Any, Dict, Iterable, List, Optional, Tuple, TypedDict

from pydantic import BaseModel, Field
from typing_extensions import NotRequired

try:
    from langgraph.graph import StateGraph, END
    LANGGRAPH_AVAILABLE = True
except ImportError:
    LANGGRAPH_AVAILABLE = False
    print("⚠️  LangGraph not installed. Install with: pip install langgraph", file=sys.stderr)

from . import config
from .errors import DomainError
from .identities import CATALOG, CatalogEntry, apply_erratum_protocol, catalog_ids, raw_grid_point
from .report import IdentityId, IdentityReport, Status

logger = logging.getLogger(__name__)


# ============================================================================
# State Schema
# ============================================================================

class SuiteState(TypedDict):
    """State schema for the verification workflow."""
    # Input
    density: str
    only: NotRequired[List[IdentityId]]
    tolerances: NotRequired[Dict[IdentityId, float]]

    # Processing
    entries: NotRequired[List[CatalogEntry]]
    raw_reports: NotRequired[List[IdentityReport]]

    # Output
    reports: NotRequired[List[IdentityReport]]
    summary: NotRequired["SuiteSummary"]

    # Quality and control
    errors: NotRequired[List[Dict[str, Any]]]


class SuiteSummary(BaseModel):
    """Counts by status and the verdict of one suite run."""
    density: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    by_status: Dict[str, int] = Field(default_factory=dict)
    failing_verified: List[str] = Field(default_factory=list)
    exit_code: int = 0


class SuiteResult(BaseModel):
    """Reports in canonical order plus their summary."""
    reports: List[IdentityReport]
    summary: SuiteSummary
    errors: List[Dict[str, Any]] = Field(default_factory=list)

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "reports": [r.to_json_dict() for r in self.reports],
            "summary": self.summary.model_dump(mode="json"),
        }


def summarize_reports(reports: Iterable[IdentityReport], density: str) -> SuiteSummary:
    """Exit code 1 iff a report whose final status is verified failed."""
    reports = list(reports)
    by_status = {s.value: 0 for s in Status}
    failing: List[str] = []
    for r in reports:
        by_status[r.status.value] += 1
        if not r.passed and r.status is Status.VERIFIED and r.id.value not in failing:
            failing.append(r.id.value)
    passed = sum(1 for r in reports if r.passed)
    return SuiteSummary(
        density=density,
        total=len(reports),
        passed=passed,
        failed=len(reports) - passed,
        by_status=by_status,
        failing_verified=failing,
        exit_code=1 if failing else 0,
    )


# ============================================================================
# Workflow
# ============================================================================

class VerificationWorkflow:
    """Runs the identity catalog as a StateGraph, or node by node without langgraph."""

    def __init__(self, workers: Optional[int] = None):
        self.workers = config.SUITE_WORKERS if workers is None else workers
        if self.workers < 1:
            raise DomainError(f"workers must be >= 1, got {self.workers}")
        self.graph = self._build_graph() if LANGGRAPH_AVAILABLE else None

    def _build_graph(self) -> StateGraph:
        """Build the LangGraph workflow."""
        workflow = StateGraph(SuiteState)

        # Add nodes
        workflow.add_node("select_entries", self.select_entries)
        workflow.add_node("run_checks", self.run_checks)
        workflow.add_node("apply_erratum_protocol", self.apply_erratum_protocol)
        workflow.add_node("summarize", self.summarize)
        workflow.add_node("log_failures", self.log_failures)

        # Set entry point
        workflow.set_entry_point("select_entries")

        # Add edges
        workflow.add_edge("select_entries", "run_checks")
        workflow.add_edge("run_checks", "apply_erratum_protocol")
        workflow.add_edge("apply_erratum_protocol", "summarize")

        # Failing verified identities get logged before the run ends
        workflow.add_conditional_edges(
            "summarize",
            self.should_log_failures,
            {
                "yes": "log_failures",
                "no": END
            }
        )
        workflow.add_edge("log_failures", END)

        return workflow.compile()

    # ------------------------------------------------------------------------
    # Node Implementations
    # ------------------------------------------------------------------------

    def select_entries(self, state: SuiteState) -> SuiteState:
        """Pick the catalog entries to run, in canonical order."""
        only = set(state.get("only") or [])
        entries = [CATALOG[i] for i in catalog_ids() if not only or i in only]
        logger.info(f"📥 Selected {len(entries)} identities at {state['density']} density")
        return {**state, "entries": entries}

    def run_checks(self, state: SuiteState) -> SuiteState:
        """Evaluate every grid point of every selected entry."""
        density = state["density"]
        tolerances = state.get("tolerances") or {}
        jobs: List[Tuple[CatalogEntry, Dict[str, Any]]] = [
            (entry, params) for entry in state.get("entries", []) for params in entry.params_for(density)
        ]
        logger.info(f"🔍 Running {len(jobs)} grid points with {self.workers} worker(s)")
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                # map keeps submission order, which is the canonical order
                raw = list(pool.map(lambda job: raw_grid_point(*job, tolerances.get(job[0].id)), jobs))
        else:
            raw = [raw_grid_point(entry, params, tolerances.get(entry.id)) for entry, params in jobs]
        state = {**state, "raw_reports": raw}
        for report in raw:
            if report.abs_residual is None:
                state = self._add_error(state, f"{report.id.value} {report.params}: {report.notes}")
        return state

    def apply_erratum_protocol(self, state: SuiteState) -> SuiteState:
        """Give each raw report its catalog status."""
        reports = [apply_erratum_protocol(CATALOG[r.id], r) for r in state.get("raw_reports", [])]
        return {**state, "reports": reports}

    def summarize(self, state: SuiteState) -> SuiteState:
        summary = summarize_reports(state.get("reports", []), state["density"])
        marker = "✅" if summary.exit_code == 0 else "❌"
        logger.info(f"{marker} {summary.passed}/{summary.total} grid points pass")
        logger.info("suite summary: %s", summary.model_dump())
        return {**state, "summary": summary}

    def should_log_failures(self, state: SuiteState) -> str:
        summary = state.get("summary")
        return "yes" if summary is not None and summary.failing_verified else "no"

    def log_failures(self, state: SuiteState) -> SuiteState:
        """Log failing reports of verified identities."""
        for report in state.get("reports", []):
            if not report.passed and report.status is Status.VERIFIED:
                logger.warning(
                    "%s failed at %s: abs %s rel %s tol %s %s",
                    report.id.value,
                    report.params,
                    report.abs_residual,
                    report.rel_residual,
                    report.tolerance,
                    report.notes,
                )
        logger.warning(f"❌ Failing verified identities: {', '.join(state['summary'].failing_verified)}")
        return state

    # ------------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------------

    def _add_error(self, state: SuiteState, error_msg: str) -> SuiteState:
        """Add error to state."""
        errors = list(state.get("errors", []))
        errors.append({
            "message": error_msg,
            "timestamp": datetime.now().isoformat()
        })
        return {**state, "errors": errors}

    def _run_sequential(self, state: SuiteState) -> SuiteState:
        state = self.select_entries(state)
        state = self.run_checks(state)
        state = self.apply_erratum_protocol(state)
        state = self.summarize(state)
        if self.should_log_failures(state) == "yes":
            state = self.log_failures(state)
        return state

    def invoke(self, state: SuiteState) -> SuiteState:
        if self.graph is None:
            return self._run_sequential(state)
        # five nodes at most, so a small recursion limit is plenty
        return self.graph.invoke(state, config={"recursion_limit": 25})


# ============================================================================
# Execution Wrapper
# ============================================================================

def _as_id(item) -> IdentityId:
    try:
        return IdentityId(item.upper() if isinstance(item, str) else item)
    except ValueError:
        raise DomainError(f"unknown identity '{item}'") from None


def run_suite(
    filter: Optional[Iterable] = None,
    density: Optional[str] = None,
    workers: Optional[int] = None,
    tolerances: Optional[Dict[Any, float]] = None,
) -> SuiteResult:
    """
    Run the verification suite.

    Args:
        filter: identity ids (or names) to run; None runs the whole catalog
        density: small, standard or dense (default from GAMMAMORPHIC_SUITE_DENSITY)
        workers: thread count (default from GAMMAMORPHIC_SUITE_WORKERS)
        tolerances: per-identity overrides of the catalog tolerance

    Returns:
        SuiteResult with reports in canonical IdentityId order and the summary
    """
    density = config.SUITE_DENSITY if density is None else density
    if density not in config.DENSITIES:
        raise DomainError(f"density must be one of {config.DENSITIES}, got {density!r}")
    only = [_as_id(item) for item in filter or []]
    overrides = {_as_id(k): float(v) for k, v in (tolerances or {}).items()}

    workflow = VerificationWorkflow(workers)
    initial_state: SuiteState = {"density": density, "only": only, "tolerances": overrides}
    final_state = workflow.invoke(initial_state)

    return SuiteResult(
        reports=final_state.get("reports", []),
        summary=final_state["summary"],
        errors=final_state.get("errors", []),
    )
