import os
from functools import lru_cache
from typing import Dict
import yaml


@lru_cache(maxsize=4)
def load_default_settings(filename=None) -> Dict:
    """Settings every scenario starts from, read from the packaged ``data/default_settings.yaml``.

    The result is cached; callers must not modify it.
    """
    if filename is None:
        settings_file = os.path.join(os.path.dirname(__file__), "..", "data", "default_settings.yaml")
    else:
        settings_file = filename

    with open(settings_file, 'r') as f:
        settings = yaml.safe_load(f)

    return settings
