import json
from ..LoadingResult import LoadingResult


def save_loading_summary(result: LoadingResult, filename: str):
    """Save whether loading was truncated, when it ended and the volume left on every arc."""
    data = {"truncated": result.truncated,
            "end": result.end,
            "slack": result.horizon.slack,
            "residual": [{"arc": arc_id, "volume": float(volume)} for arc_id, volume in result.residual.items()]}
    with open(filename, 'w') as f:
        json.dump(data, f, indent=1)
