"""
Settings Management
Handles computation limits and run defaults
"""
import copy
import json
import logging
import os
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

DEFAULTS: Dict[str, Any] = {
    'search': {
        'box_cap': 2 ** 26,
        'default_box': [0, 1],
        'value_bound': None,
        'chunk_count': 64,
    },
    'classify': {
        'bound': 2 ** 63,
    },
    'number_theory': {
        'two_squares_brute_force_limit': 10 ** 6,
    },
    'symbolic': {
        'max_quotient_order_at_16': 4,
        'max_terms': 10 ** 5,
    },
    'block': {
        'max_index': 5,
    },
    'cayley': {
        'associativity_check_limit': 32,
    },
    'runtime': {
        'threads': 1,
        'seed': 0,
    },
    'recent_outputs': [],
}

MAX_RECENT_OUTPUTS = 10


class Settings:
    """Manages application settings"""

    def __init__(self, config_file: Optional[str] = None):
        if config_file is None:
            home = os.path.expanduser("~")
            config_dir = os.path.join(home, ".groupdet")
            config_file = os.path.join(config_dir, "settings.json")

        self.config_file = config_file
        self.settings = self.load()

    def load(self) -> Dict[str, Any]:
        """Load settings from file, filling gaps from the defaults"""
        settings = self.get_defaults()
        if not os.path.exists(self.config_file):
            return settings
        try:
            with open(self.config_file, 'r') as f:
                stored = json.load(f)
        except (OSError, ValueError) as e:
            logger.warning("Error loading settings from %s: %s", self.config_file, e)
            return settings
        if not isinstance(stored, dict):
            logger.warning("Ignoring settings file %s: top level is not an object", self.config_file)
            return settings
        _merge(settings, stored)
        return settings

    def save(self):
        """Save settings to file"""
        try:
            directory = os.path.dirname(self.config_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(self.config_file, 'w') as f:
                json.dump(self.settings, f, indent=4, sort_keys=True)
        except OSError as e:
            logger.warning("Error saving settings to %s: %s", self.config_file, e)

    def get_defaults(self) -> Dict[str, Any]:
        return copy.deepcopy(DEFAULTS)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a setting value by dotted key, e.g. 'search.box_cap'"""
        value = self.settings
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any):
        """Set a setting value and persist it"""
        keys = key.split('.')
        current = self.settings
        for k in keys[:-1]:
            if not isinstance(current.get(k), dict):
                current[k] = {}
            current = current[k]
        current[keys[-1]] = value
        self.save()

    def add_recent_output(self, file_path: str):
        """Remember a table or report written by the CLI"""
        recent = [p for p in self.get('recent_outputs', []) if p != file_path]
        recent.insert(0, file_path)
        self.set('recent_outputs', recent[:MAX_RECENT_OUTPUTS])

    def get_recent_outputs(self) -> list:
        return list(self.get('recent_outputs', []))


def _merge(target: Dict[str, Any], overrides: Dict[str, Any]):
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(target.get(key), dict):
            _merge(target[key], value)
        else:
            target[key] = value
