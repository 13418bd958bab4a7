import json
import logging
import os
from pathlib import Path

from .dir import get_witness_dir
from .errors import SpecSyntaxError
from .util import checksum

logger = logging.getLogger(__name__)


def save_witness(witness: dict, directory: str=None) -> str:
    """Write `witness` as JSON named after its checksum; returns the path."""
    if directory is None:
        directory = get_witness_dir()
    os.makedirs(directory, exist_ok=True)

    path = os.path.join(directory, '{}.json'.format(checksum(witness)))
    Path(path).write_text(json.dumps(witness, indent=2, sort_keys=True))
    logger.info('Witness written to %s', path)

    return path


def load_witness(path) -> dict:
    try:
        witness = json.loads(Path(path).read_text())
    except (OSError, ValueError) as e:
        raise SpecSyntaxError('Cannot read witness {}: {}'.format(path, e))

    if not isinstance(witness, dict) or 'theorem' not in witness or 'inputs' not in witness:
        raise SpecSyntaxError('{} is not a witness file'.format(path))

    return witness
