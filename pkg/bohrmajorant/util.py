from hashlib import sha1
import json


def deep_merge_dicts(original, incoming):
    """
    Deep merge two dictionaries. Modifies original.
    For key conflicts if both values are:
     a. dict: Recursively call deep_merge_dicts on both values.
     b. anything else: incoming value replaces the original one.

    Lists are replaced as a whole, so a preset like `radius.ladder.degree`
    can be shortened by an override.
    """
    for key in incoming:
        if key in original and isinstance(original[key], dict) and isinstance(incoming[key], dict):
            deep_merge_dicts(original[key], incoming[key])
        else:
            original[key] = incoming[key]

    return original


def canonical_json(data):
    return json.dumps(data, sort_keys=True, separators=(',', ':'))


def checksum(data):
    if isinstance(data, dict) or isinstance(data, list):
        data = canonical_json(data)
    if isinstance(data, str):
        data = data.encode("utf-8")
    return sha1(data).hexdigest()


def parse_complex(text):
    """
    Parse `re+imi` style complex numbers, e.g. `0.5`, `-0.3i`, `0.1-0.2i`.
    A trailing `j` is accepted as well.
    """
    s = str(text).strip().replace(' ', '')
    if not s:
        raise ValueError('Empty complex literal')
    if s.endswith('i'):
        s = s[:-1] + "j"
    return complex(s)


def format_complex(value):
    value = complex(value)
    if value.imag == 0:
        return repr(value.real)
    return '{!r}{:+}i'.format(value.real, value.imag)
