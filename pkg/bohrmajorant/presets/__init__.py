import json
import copy

try:
    from importlib.resources import read_text
except ImportError:
    from importlib_resources import read_text

from bohrmajorant.util import deep_merge_dicts

default = json.loads(read_text('bohrmajorant.presets', 'default.json'))


def update_config(additional_config):
    """Merge overrides into the live defaults. Scalars are overridden."""
    deep_merge_dicts(original=default, incoming=additional_config)


def get_section(name):
    return copy.deepcopy(default[name])


def setting(section, key):
    return default[section][key]
