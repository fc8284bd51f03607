from .congruence import (
    Layers, axiom_rewrites, congruent, decompose, normal_form, ordered_proc_vars, state_key,
)
from .semantics import (
    EPS, CallRedex, ComRedex, Comm, CommMismatch, Eps, RedexScan, Step, enabled_steps,
    find_redexes, next_proc,
)

__all__ = [
    'Layers', 'axiom_rewrites', 'congruent', 'decompose', 'normal_form', 'ordered_proc_vars',
    'state_key',
    'EPS', 'CallRedex', 'ComRedex', 'Comm', 'CommMismatch', 'Eps', 'RedexScan', 'Step',
    'enabled_steps', 'find_redexes', 'next_proc',
]
