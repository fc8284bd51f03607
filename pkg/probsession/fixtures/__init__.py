from .corpus import (
    CORPUS, FIXTURE_DIR, INTERVAL_VARIANTS, FixtureEntry, fixture_entry, load_fixture,
    load_variants, typed_entries,
)

__all__ = [
    'CORPUS', 'FIXTURE_DIR', 'INTERVAL_VARIANTS', 'FixtureEntry', 'fixture_entry',
    'load_fixture', 'load_variants', 'typed_entries',
]
