"""
Flag-friendly function specs:

    moebius:a                 (a - z) / (1 - a z)
    blaschke:[z1,z2,...]@theta  z e^{i theta} prod (z_k - z) / (1 - conj(z_k) z)
    inner:[z1,z2,...]@theta   the same product without the leading z
    schur:[g0,g1,...]         Schur parameters
    poly:c0,c1,...            exact polynomial
    koebe | koebe@theta       Koebe function and rotations
    const:c                   constant
    dilated:b,rho:<spec>      b * u(z / rho)
    @path.json | path.json    spec or series JSON file

Complex entries are written `re+imi`.
"""
import json
from pathlib import Path

from ..errors import SpecSyntaxError
from ..util import parse_complex
from . import specs


def _complex(text):
    try:
        return parse_complex(text)
    except ValueError as e:
        raise SpecSyntaxError('Malformed complex number {!r}: {}'.format(text, e))


def _real(text):
    try:
        return float(text)
    except ValueError as e:
        raise SpecSyntaxError('Malformed real number {!r}: {}'.format(text, e))


def _bracket_list(text):
    text = text.strip()
    if not (text.startswith('[') and text.endswith(']')):
        raise SpecSyntaxError('Expected a bracketed list, got {!r}'.format(text))
    body = text[1:-1].strip()
    if not body:
        return []
    return [_complex(item) for item in body.split(',')]


def _split_rotation(text):
    if '@' in text:
        body, rotation = text.rsplit('@', 1)
        return body, _real(rotation)
    return text, 0.0


def load_spec_file(path) -> specs.FunctionSpec:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as e:
        raise SpecSyntaxError('Cannot read spec file {}: {}'.format(path, e))

    return specs.from_json(data)


def parse_function(text: str, degree: int=None) -> specs.FunctionSpec:
    text = str(text).strip()
    if text.startswith('@'):
        return _with_degree(load_spec_file(text[1:]), degree)
    if text.endswith('.json'):
        return _with_degree(load_spec_file(text), degree)

    head, _, body = text.partition(':')
    head = head.strip().lower()

    if head == 'koebe' or head.startswith('koebe@'):
        _, rotation = _split_rotation(head)
        return specs.KoebeSpec(rotation, degree)
    if head == 'moebius':
        return specs.MoebiusSpec(_real(body), degree)
    if head in ('blaschke', 'inner'):
        body, rotation = _split_rotation(body)
        cls = specs.BlaschkeSpec if head == 'blaschke' else specs.InnerSpec
        return cls(_bracket_list(body), rotation, degree)
    if head == 'schur':
        return specs.SchurSpec(_bracket_list(body), degree)
    if head == 'poly':
        if not body.strip():
            raise SpecSyntaxError('poly: needs at least one coefficient')
        return specs.PolySpec([_complex(c) for c in body.split(',')])
    if head == 'const':
        return specs.ConstSpec(_complex(body))
    if head == 'dilated':
        params, _, inner = body.partition(':')
        try:
            b, rho = params.split(',')
        except ValueError:
            raise SpecSyntaxError('dilated: expects b,rho:<spec>, got {!r}'.format(text))
        return specs.DilatedSpec(parse_function(inner, degree), _real(b), _real(rho), degree)

    raise SpecSyntaxError('Unknown function spec {!r}'.format(text))


def _with_degree(spec, degree):
    if degree is None:
        return spec
    return spec.with_degree(degree)
