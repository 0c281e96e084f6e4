"""Solver tunables, read from Django settings at call time."""
from django.conf import settings


def size_cap():
    return getattr(settings, 'GAME_SIZE_CAP', 10 ** 6)


def tie_cap():
    return getattr(settings, 'GAME_TIE_CAP', 256)


def tie_pivot_limit():
    return getattr(settings, 'GAME_TIE_PIVOT_LIMIT', 4096)


def weight_grid():
    """Configured weight grid resolution; 0 means the per-k default."""
    return getattr(settings, 'GAME_WEIGHT_GRID', 0)


def oracle_grids():
    return (
        getattr(settings, 'GAME_ORACLE_X_GRID', 50),
        getattr(settings, 'GAME_ORACLE_Y_GRID', 40),
    )


def axiom_search_grids():
    return tuple(getattr(settings, 'GAME_AXIOM_SEARCH_GRIDS', (4, 8, 16, 32)))
