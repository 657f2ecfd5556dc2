import os

DEFAULT_EPS_SCALE = 1e-9


def eps_scale() -> float:
    """Relative tolerance factor; ANNULUS_EPS overrides it."""
    raw = os.environ.get("ANNULUS_EPS")
    if raw is None:
        return DEFAULT_EPS_SCALE
    value = float(raw)
    if not value > 0:
        raise ValueError(f"ANNULUS_EPS must be positive, got {raw!r}")
    return value
