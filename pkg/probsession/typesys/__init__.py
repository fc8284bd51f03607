from .types import (
    END, BranchT, End, GBranch, Interaction, LBranch, LSelect, Rec, SelectT, Sort, TVar,
    check_type_term, free_type_vars, substitute_type_var, unfold,
)
from .equality import erased_equal, types_equal
from .intervals import IntervalSetClass, classify_interval_set, is_proper, is_reachable, tighten
from .projection import IntervalSetIssue, WellFormednessReport, pid, project, well_formed
from .refine import erase, intersect_global, intersect_local, intersect_typing, relax_intervals

__all__ = [
    'END', 'BranchT', 'End', 'GBranch', 'Interaction', 'LBranch', 'LSelect', 'Rec', 'SelectT',
    'Sort', 'TVar', 'check_type_term', 'free_type_vars', 'substitute_type_var', 'unfold',
    'erased_equal', 'types_equal',
    'IntervalSetClass', 'classify_interval_set', 'is_proper', 'is_reachable', 'tighten',
    'IntervalSetIssue', 'WellFormednessReport', 'pid', 'project', 'well_formed',
    'erase', 'intersect_global', 'intersect_local', 'intersect_typing', 'relax_intervals',
]
