from .environment import (
    EMPTY_SORTING, EMPTY_TYPING, ProcSignature, Sorting, Typing, channel_key,
)
from .typecheck import (
    MODES, STRICT, SUBSET, BranchJudgement, TypeChecker, check_process, open_restrictions,
    reannotate, session_typing, type_check,
)
from .reduction import TypeStep, type_step
from .harness import (
    FAIL, INCONCLUSIVE, NOT_APPLICABLE, PASS, Exploration, HarnessReport, Violation,
    check_deadlock_freedom, explore_stuck_states, verify_equivalence_preservation,
    verify_intersection, verify_lemma_properties, verify_subject_reduction,
)

__all__ = [
    'EMPTY_SORTING', 'EMPTY_TYPING', 'ProcSignature', 'Sorting', 'Typing', 'channel_key',
    'MODES', 'STRICT', 'SUBSET', 'BranchJudgement', 'TypeChecker', 'check_process',
    'open_restrictions', 'reannotate', 'session_typing', 'type_check',
    'TypeStep', 'type_step',
    'FAIL', 'INCONCLUSIVE', 'NOT_APPLICABLE', 'PASS', 'Exploration', 'HarnessReport', 'Violation',
    'check_deadlock_freedom', 'explore_stuck_states', 'verify_equivalence_preservation',
    'verify_intersection', 'verify_lemma_properties', 'verify_subject_reduction',
]
