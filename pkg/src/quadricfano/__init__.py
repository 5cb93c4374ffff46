"""Exact intersection theory on smooth quadrics ``Q^n`` and a replayable
classification of rank-2 weak Fano bundles on ``Q^n`` for ``n >= 5``."""

from .bundles import ChernData, chern_character, s6_closed_form_q6, segre_inversion, segre_recurrence, split, twist
from .chow import ChowClass, QuadricContext, degree, hyperplane, middle_relations_check, mul
from .classifier import ClassificationRecord, Outcome, RunConfig, classify
from .errors import ContractError, NotApplicable
from .filters import (
    FilterVerdict, Status, anticanonical_degree, nef_c2_bound, sin_incompatibility, sine_gap, splitting_criterion,
)
from .replay import CheckStatus, PaperCheck, verify_paper
from .report import emit_report
from .riemann_roch import chi_hrr, chi_line_oracle, chi_q5, h0_line_oracle, todd_tangent

__all__ = [
    "ChernData", "ChowClass", "ClassificationRecord", "CheckStatus", "ContractError", "FilterVerdict",
    "NotApplicable", "Outcome", "anticanonical_degree", "nef_c2_bound", "sin_incompatibility", "sine_gap",
    "split", "splitting_criterion", "PaperCheck", "QuadricContext", "RunConfig", "Status",
    "chern_character", "chi_hrr", "chi_line_oracle", "chi_q5", "classify", "degree", "emit_report",
    "h0_line_oracle", "hyperplane", "middle_relations_check", "mul", "s6_closed_form_q6",
    "segre_inversion", "segre_recurrence", "todd_tangent", "twist", "verify_paper",
]
