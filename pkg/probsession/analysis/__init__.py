from .paths import EvolutionPath, StepCache, enumerate_paths, require_complete
from .reach import NOT_COMPUTED, NotComputed, ReachEntry, reach, reach_distribution, reach_step, total_probability
from .rng import TrialRNG
from .simulate import AuditEntry, SimulationReport, declared_intervals, simulate

__all__ = [
    'EvolutionPath', 'StepCache', 'enumerate_paths', 'require_complete',
    'NOT_COMPUTED', 'NotComputed', 'ReachEntry', 'reach', 'reach_distribution', 'reach_step',
    'total_probability',
    'TrialRNG',
    'AuditEntry', 'SimulationReport', 'declared_intervals', 'simulate',
]
