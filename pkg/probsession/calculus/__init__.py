from .prob import ONE, ZERO, Interval, Prob, format_prob, short_prob, to_prob
from .process import (
    NIL, Bool, Branch, BranchArm, Call, Def, Int, Nil, Par, Restrict, Select, SelectBranch,
    SessionName, SessionRole, Str, Var, components, par,
)
from .binders import (
    BinderReport, binder_report, check_probability_complete, free_channels, free_names,
    free_proc_vars, fresh_name, instantiate, rename_names, rename_proc_vars, substitute,
)
from .alpha import alpha_canonical, struct_equal, structural_form

__all__ = [
    'ONE', 'ZERO', 'Interval', 'Prob', 'format_prob', 'short_prob', 'to_prob',
    'NIL', 'Bool', 'Branch', 'BranchArm', 'Call', 'Def', 'Int', 'Nil', 'Par', 'Restrict',
    'Select', 'SelectBranch', 'SessionName', 'SessionRole', 'Str', 'Var', 'components', 'par',
    'BinderReport', 'binder_report', 'check_probability_complete', 'free_channels',
    'free_names', 'free_proc_vars', 'fresh_name', 'instantiate', 'rename_names',
    'rename_proc_vars', 'substitute',
    'alpha_canonical', 'struct_equal', 'structural_form',
]
